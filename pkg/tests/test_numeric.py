import mpmath
import pytest
import sympy
from hypothesis import given, strategies as st

from aabeta.numeric import (
    PrimeGenerationError,
    RandomSource,
    approx_log2,
    bit_length,
    generate_prime,
    is_probable_prime,
    random_exact_bits,
)


def trial_division_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_random_exact_bits_small_cases(rng):
    assert {random_exact_bits(rng, 1) for _ in range(20)} == {1}
    assert {random_exact_bits(rng, 2) for _ in range(200)} == {2, 3}


def test_random_exact_bits_64(rng):
    assert all(random_exact_bits(rng, 64).bit_length() == 64 for _ in range(10_000))


def test_random_exact_bits_rejects_zero(rng):
    with pytest.raises(ValueError):
        random_exact_bits(rng, 0)


@given(st.integers(min_value=1, max_value=3000), st.integers(min_value=0, max_value=2**64 - 1))
def test_exact_bits_property(bits, seed):
    assert bit_length(random_exact_bits(RandomSource(seed), bits)) == bits


def test_seeded_streams_identical():
    a, b = RandomSource(99), RandomSource(99)
    assert all(a.getrandbits(64) == b.getrandbits(64) for _ in range(1_000_000))


def test_seed_range():
    with pytest.raises(ValueError):
        RandomSource(2**64)
    with pytest.raises(ValueError):
        RandomSource(-1)


def test_randrange_has_no_modulo_bias():
    rng = RandomSource(5)
    counts = [0, 0, 0]
    for _ in range(30_000):
        counts[rng.randrange(0, 3)] += 1
    assert max(counts) - min(counts) < 600


def test_bit_length():
    assert bit_length(0) == 0
    assert bit_length(66857602) == 26
    assert bit_length(12287919017871704653) == 64
    with pytest.raises(ValueError):
        bit_length(-1)


def test_approx_log2_values():
    assert approx_log2(1) == 0.0
    assert approx_log2(2**100) == 100.0
    # mpmath at 50 digits: 69.37541420305268...
    assert approx_log2(765738770679166291180) == pytest.approx(69.375414203052686, abs=1e-9)
    with pytest.raises(ValueError):
        approx_log2(0)


@given(st.integers(min_value=1, max_value=2**4000))
def test_approx_log2_matches_mpmath(x):
    mpmath.mp.dps = 40
    assert abs(approx_log2(x) - float(mpmath.log(x, 2))) < 1e-6


@given(st.integers(min_value=1, max_value=2**300), st.integers(min_value=0, max_value=2**300))
def test_approx_log2_monotone(x, gap):
    assert approx_log2(x) <= approx_log2(x + gap)


def test_is_probable_prime_matches_trial_division():
    for n in range(-5, 5000):
        assert is_probable_prime(n) == trial_division_is_prime(n), n


@pytest.mark.parametrize(
    "n",
    [
        3317044064679887385961981,  # composite at the deterministic bound
        2**89 - 1,
        2**127 - 1,
        (2**61 - 1) * (2**89 - 1),
        561 * 1105 * 1729,
    ],
)
def test_is_probable_prime_large(n):
    assert is_probable_prime(n) == sympy.isprime(n)


def test_generate_prime_2_bits(rng):
    assert {generate_prime(rng, 2) for _ in range(50)} == {2, 3}


def test_generate_prime_8_bits(rng):
    for _ in range(200):
        p = generate_prime(rng, 8)
        assert 131 <= p <= 251
        assert all(p % d for d in (2, 3, 5, 7, 11, 13))


@pytest.mark.parametrize("bits", [12, 20, 32, 64, 256, 512])
def test_generate_prime_exact_size_and_prime(rng, bits):
    p = generate_prime(rng, bits)
    assert p.bit_length() == bits and p % 2 == 1
    # fresh randomness, independent of the generator's bases
    assert is_probable_prime(p, rounds=32, rng=RandomSource())
    if bits <= 20:
        assert trial_division_is_prime(p)
    assert sympy.isprime(p)


def test_32_bit_reference_prime_is_a_valid_output():
    p = 3471523427
    assert p.bit_length() == 32 and is_probable_prime(p)


def test_generate_prime_budget(rng):
    with pytest.raises(PrimeGenerationError):
        generate_prime(rng, 64, max_candidates=0)
