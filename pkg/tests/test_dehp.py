import pytest

from aabeta import fixtures
from aabeta.cipher import Ciphertext, SessionKeys, encrypt, encrypt_with_keys
from aabeta.cryptanalysis import WorkBudgetExceeded, bruteforce_dehp1
from aabeta.keygen import PublicKey, keygen
from aabeta.numeric import RandomSource

from oracles import double_loop


def test_reference_instance():
    pub = PublicKey(fixtures.E1, fixtures.E2, 32)
    ct = Ciphertext(fixtures.C, 32)
    out = bruteforce_dehp1(pub, ct, truth=(33, 32, fixtures.M))
    assert (33, 32, fixtures.M) in out.candidates and out.success
    assert set(out.candidates) == double_loop(pub, ct)


def test_constructed_instance(reference_kp):
    pub = reference_kp.public
    ct = encrypt_with_keys(pub, 0, SessionKeys(1, 1))
    assert (1, 1, 0) in bruteforce_dehp1(pub, ct).candidates


def test_candidates_re_encrypt():
    rng = RandomSource(4)
    for _ in range(20):
        kp = keygen(rng, 20, "toy")
        ct = encrypt(rng, kp.public, rng.getrandbits(kp.public.profile.m_bits))
        for k1, k2, m in bruteforce_dehp1(kp.public, ct).candidates:
            assert encrypt_with_keys(kp.public, m, SessionKeys(k1, k2)) == ct


def test_refuses_large_key_space(strict_keys):
    pub = strict_keys[512].public
    with pytest.raises(WorkBudgetExceeded):
        bruteforce_dehp1(pub, Ciphertext(pub.e1, 512))
