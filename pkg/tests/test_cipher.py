import pytest
from hypothesis import given, settings, strategies as st

from aabeta import fixtures
from aabeta.cipher import Ciphertext, SessionKeys, decrypt, encrypt, encrypt_with_keys
from aabeta.keygen import PrivateKey


def test_reference_encryption(reference_kp):
    ct = encrypt_with_keys(reference_kp.public, fixtures.M, SessionKeys(33, 32))
    assert ct == Ciphertext(fixtures.C, 32)


def test_reference_decryption(reference_kp):
    ct = Ciphertext(fixtures.C, 32)
    assert ct.c % fixtures.P == fixtures.C_MOD_P == 32 * fixtures.V + fixtures.M
    assert decrypt(reference_kp.private, ct) == fixtures.M


def test_linearity_edges(reference_kp):
    pub = reference_kp.public
    assert encrypt_with_keys(pub, 0, SessionKeys(1, 1)).c == pub.e1 + pub.e2
    assert encrypt_with_keys(pub, 1, SessionKeys(1, 1)).c == pub.e1 + pub.e2 + 1


def test_zero_keys_only_when_allowed(reference_kp):
    pub = reference_kp.public
    with pytest.raises(ValueError):
        encrypt_with_keys(pub, 0, SessionKeys(0, 0))
    ct = encrypt_with_keys(pub, 0, SessionKeys(0, 0), allow_zero_keys=True)
    assert ct.c == 0
    m = 12345
    assert decrypt(reference_kp.private, encrypt_with_keys(pub, m, SessionKeys(0, 0), allow_zero_keys=True)) == m


def test_range_errors(reference_kp, rng):
    pub = reference_kp.public
    with pytest.raises(ValueError):
        encrypt(rng, pub, 2**26)
    with pytest.raises(ValueError):
        encrypt(rng, pub, -1)
    with pytest.raises(ValueError):
        encrypt_with_keys(pub, 1, SessionKeys(64, 1))


def test_guard_violation_breaks_reference_key(reference_kp):
    pub, priv = reference_kp.public, reference_kp.private
    assert 63 * fixtures.V + fixtures.M == 4251181917 > fixtures.P
    ct = encrypt_with_keys(pub, fixtures.M, SessionKeys(33, 63))
    assert decrypt(priv, ct) != fixtures.M


def test_fresh_encryptions_differ(reference_kp, rng):
    cts = {encrypt(rng, reference_kp.public, fixtures.M).c for _ in range(100)}
    # 63*63 equally likely key pairs; a handful of collisions is possible
    assert len(cts) > 90


@pytest.mark.parametrize("n", [128, 256, 512])
def test_round_trip_strict(strict_keys, rng, n):
    kp = strict_keys[n]
    for _ in range(200):
        m = rng.getrandbits(kp.public.profile.m_bits)
        assert decrypt(kp.private, encrypt(rng, kp.public, m)) == m


def test_ciphertext_size_bound(strict_keys, rng):
    kp = strict_keys[256]
    k_bits = kp.public.profile.k_bits
    for _ in range(200):
        ct = encrypt(rng, kp.public, rng.getrandbits(kp.public.profile.m_bits))
        assert ct.c.bit_length() <= kp.public.e1.bit_length() + k_bits + 2
        assert ct.c.bit_length() <= 2 * 256 + k_bits + 1


@settings(max_examples=200)
@given(
    st.integers(min_value=0, max_value=2**26 - 1),
    st.integers(min_value=0, max_value=2**26 - 1),
    st.integers(min_value=1, max_value=63),
    st.integers(min_value=1, max_value=63),
)
def test_difference_of_ciphertexts_is_message_difference(m1, m2, k1, k2):
    from aabeta.fixtures import reference_keypair

    pub = reference_keypair().public
    keys = SessionKeys(k1, k2)
    assert encrypt_with_keys(pub, m1, keys).c - encrypt_with_keys(pub, m2, keys).c == m1 - m2


def test_wrong_key_gives_garbage(strict_keys, rng):
    kp, other = strict_keys[128], strict_keys[256]
    m = rng.getrandbits(kp.public.profile.m_bits)
    ct = encrypt(rng, kp.public, m)
    wrong = PrivateKey(other.private.p, other.private.v, 128)
    assert decrypt(wrong, ct) != m
