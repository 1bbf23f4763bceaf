import pytest
import sympy

from aabeta import fixtures
from aabeta.cipher import SessionKeys, decrypt, encrypt_with_keys
from aabeta.cryptanalysis import (
    MalformedKeyError,
    WorkBudgetExceeded,
    factor_semiprime,
    factoring_attack,
    pollard_rho,
    private_key_candidates,
)
from aabeta.keygen import PrivateKey, PublicKey, keygen
from aabeta.numeric import RandomSource, generate_prime


@pytest.mark.parametrize("bits", [8, 16, 24, 32, 40])
def test_factor_semiprime_matches_sympy(bits):
    rng = RandomSource(bits)
    for _ in range(5):
        p, q = generate_prime(rng, bits), generate_prime(rng, bits)
        n = p * q
        f1, f2 = factor_semiprime(n)
        assert f1 * f2 == n
        assert sorted(sympy.factorint(n, multiple=True)) == sorted((f1, f2))


def test_pollard_rho_finds_factor():
    n = 1000003 * 1000033
    f = pollard_rho(n, 1 << 20)
    assert f in (1000003, 1000033)


def test_pollard_rho_budget():
    n = (2**61 - 1) * (2**89 - 1)
    with pytest.raises(WorkBudgetExceeded):
        pollard_rho(n, 1000)


def test_prime_modulus_is_malformed():
    assert factor_semiprime(fixtures.P) == (fixtures.P, 1)
    with pytest.raises(MalformedKeyError):
        factoring_attack(PublicKey(fixtures.P, fixtures.E2, 32))


def test_reference_key_recovered():
    pub = PublicKey(fixtures.E1, fixtures.E2, 32)
    key = factoring_attack(pub)
    assert key == PrivateKey(fixtures.P, fixtures.V, 32)
    assert key.v == fixtures.E2 % fixtures.P


def test_reference_key_recovered_with_probe(reference_kp):
    ct = encrypt_with_keys(reference_kp.public, fixtures.M, SessionKeys(33, 32))
    key = factoring_attack(reference_kp.public, probes=[(ct, fixtures.M)])
    assert key.p == fixtures.P


def test_candidates_cover_both_roles():
    pub = PublicKey(fixtures.E1, fixtures.E2, 32)
    cands = private_key_candidates(pub, fixtures.Q, fixtures.P)
    assert [k.p for k in cands] == [fixtures.P, fixtures.Q]
    assert cands[1].v == fixtures.E2 % fixtures.Q == 2538764222


@pytest.mark.parametrize("n", [16, 24, 32])
def test_recovered_key_decrypts_like_original(n):
    rng = RandomSource(n)
    kp = keygen(rng, n, "toy")
    prof = kp.public.profile
    m0 = rng.randrange(0, min(kp.private.v, 1 << prof.m_bits))
    probe = (encrypt_with_keys(kp.public, m0, SessionKeys(1, 1)), m0)
    key = factoring_attack(kp.public, probes=[probe])
    assert key.p * (kp.public.e1 // key.p) == kp.public.e1
    assert key.v == kp.public.e2 % key.p
    for _ in range(100):
        m = rng.getrandbits(prof.m_bits)
        ct = encrypt_with_keys(kp.public, m, SessionKeys(rng.randrange(1, 1 << prof.k_bits), 1))
        assert decrypt(key, ct) == decrypt(kp.private, ct)


def test_candidate_order_picks_generator_factor_without_probes():
    rng = RandomSource(77)
    hits = 0
    for n in (16, 24, 32):
        for _ in range(30):
            kp = keygen(rng, n, "toy")
            f1, f2 = sorted((kp.private.p, kp.public.e1 // kp.private.p))
            hits += private_key_candidates(kp.public, f1, f2)[0] == kp.private
    assert hits >= 85
