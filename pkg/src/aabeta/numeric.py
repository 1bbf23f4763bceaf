"""Big-integer helpers: seeded randomness, exact-size sampling, primes, logs."""

from __future__ import annotations

import math
import random
from typing import Optional

__all__ = [
    "RandomSource",
    "random_exact_bits",
    "generate_prime",
    "is_probable_prime",
    "bit_length",
    "approx_log2",
    "PrimeGenerationError",
]

# Deterministic Miller-Rabin with these bases is exact below this bound.
_DETERMINISTIC_LIMIT = 3317044064679887385961981
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
_SIEVE_LIMIT = 2000


def _primorial(limit: int) -> int:
    product = 1
    for k in range(2, limit):
        if all(k % d for d in range(2, math.isqrt(k) + 1)):
            product *= k
    return product


# Product of primes below _SIEVE_LIMIT; one gcd rejects most candidates.
_PRIMORIAL = _primorial(_SIEVE_LIMIT)


class PrimeGenerationError(RuntimeError):
    """Raised when no prime was found within the candidate budget."""


class RandomSource:
    """A randomness source that is reproducible when seeded.

    With a seed, the stream comes from a Mersenne Twister and is identical
    across runs of this package. Without one, the OS CSPRNG is used, which is
    what real key generation should do.
    """

    def __init__(self, seed: Optional[int] = None):
        if seed is not None:
            if not 0 <= seed < 2**64:
                raise ValueError("seed must be a 64-bit unsigned integer")
            self._rng: random.Random = random.Random(seed)
        else:
            self._rng = random.SystemRandom()
        self.seed = seed

    @property
    def deterministic(self) -> bool:
        return self.seed is not None

    def getrandbits(self, k: int) -> int:
        return self._rng.getrandbits(k)

    def randrange(self, start: int, stop: int) -> int:
        """Uniform integer in [start, stop); rejection sampled, no modulo bias."""
        return self._rng.randrange(start, stop)

    def randbytes(self, n: int) -> bytes:
        return self.getrandbits(8 * n).to_bytes(n, "big") if n else b""


def bit_length(x: int) -> int:
    if x < 0:
        raise ValueError("bit_length is defined for non-negative integers only")
    return x.bit_length()


def random_exact_bits(rng: RandomSource, bits: int) -> int:
    """Uniform integer with exactly ``bits`` bits (top bit forced)."""
    if bits < 1:
        raise ValueError("bits must be >= 1")
    return (1 << (bits - 1)) | rng.getrandbits(bits - 1)


def approx_log2(x: int) -> float:
    """log2 of a big integer, accurate to well under 1e-6.

    Only the top 64 bits go through floating point, so this works for
    integers far beyond the double range.
    """
    if x <= 0:
        raise ValueError("approx_log2 requires x >= 1")
    shift = max(x.bit_length() - 64, 0)
    return math.log2(x >> shift) + shift


def _miller_rabin_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rounds: int = 64, rng: Optional[RandomSource] = None) -> bool:
    """Miller-Rabin test.

    Exact for n < 3.3e24 (fixed witness set); otherwise ``rounds`` random
    bases, false-positive probability at most 4**-rounds.
    """
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n == sp:
            return True
        if n % sp == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _DETERMINISTIC_LIMIT:
        bases = _DETERMINISTIC_BASES
    else:
        src = rng if rng is not None else RandomSource()
        bases = tuple(src.randrange(2, n - 1) for _ in range(rounds))
    return all(_miller_rabin_round(n, d, s, a) for a in bases)


def generate_prime(rng: RandomSource, bits: int, max_candidates: Optional[int] = None) -> int:
    """Probable prime with exactly ``bits`` bits."""
    if bits < 2:
        raise ValueError("bits must be >= 2")
    if bits == 2:
        return rng.randrange(2, 4)
    budget = max_candidates if max_candidates is not None else 10 * bits * bits
    for _ in range(budget):
        candidate = random_exact_bits(rng, bits) | 1
        if candidate > _SIEVE_LIMIT and math.gcd(candidate, _PRIMORIAL) != 1:
            continue
        if is_probable_prime(candidate, rng=rng):
            return candidate
    raise PrimeGenerationError(f"no {bits}-bit prime found in {budget} candidates")
