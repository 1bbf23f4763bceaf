"""Key recovery by factoring e1 = pq: trial division, then Brent's rho."""

from __future__ import annotations

import math
from typing import Sequence

from ..cipher import Ciphertext, decrypt
from ..keygen import PrivateKey, PublicKey, decrypt_guard_holds
from ..numeric import is_probable_prime
from .outcome import WorkBudgetExceeded

TRIAL_LIMIT = 1 << 12


class MalformedKeyError(ValueError):
    """The public modulus is not a product of two primes."""


def trial_division(n: int, limit: int = TRIAL_LIMIT) -> int | None:
    if n % 2 == 0:
        return 2
    for f in range(3, min(limit, math.isqrt(n)) + 1, 2):
        if n % f == 0:
            return f
    return None


def pollard_rho(n: int, budget: int) -> int:
    """A non-trivial factor of composite odd ``n`` (Brent's variant).

    ``budget`` caps the total number of polynomial steps over all restarts.
    """
    steps = 0
    batch = 128
    for c in range(1, n):
        y, r, acc, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    acc = acc * abs(x - y) % n
                steps += min(batch, r - k)
                g = math.gcd(acc, n)
                k += batch
            r *= 2
            if steps > budget:
                raise WorkBudgetExceeded(f"Pollard rho exceeded {budget} steps")
        if g == n:
            # batched gcd overshot; replay one step at a time
            while True:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                if g > 1:
                    break
        if g != n:
            return g
    raise WorkBudgetExceeded("Pollard rho exhausted its polynomial choices")


def factor_semiprime(n: int, budget: int = 1 << 22) -> tuple[int, int]:
    """Split ``n`` into (f, n // f), f <= n // f. A prime gives (n, 1)."""
    if n < 4 or is_probable_prime(n):
        return n, 1
    f = trial_division(n) or pollard_rho(n, budget)
    return tuple(sorted((f, n // f)))  # type: ignore[return-value]


def private_key_candidates(pub: PublicKey, f1: int, f2: int) -> list[PrivateKey]:
    """Both role assignments of the factors, most plausible first.

    Nothing public says which factor is a1 - a2. Generated keys have v of
    exactly ``v_bits`` bits and (normally) satisfy the worst-case decryption
    guard, while the wrong factor leaves a residue that is usually full size.
    """
    profile = pub.profile
    keys = [PrivateKey(p=f, v=pub.e2 % f, n=pub.n) for f in (f1, f2)]
    return sorted(
        keys,
        key=lambda k: (k.v.bit_length() != profile.v_bits, not decrypt_guard_holds(k.p, k.v, profile)),
    )


def factoring_attack(
    pub: PublicKey,
    budget: int = 1 << 22,
    probes: Sequence[tuple[Ciphertext, int]] = (),
) -> PrivateKey:
    """Recover a working private key from the public key alone.

    ``probes`` are known (ciphertext, plaintext) pairs used to pick the
    right factor; without them the size and guard hints decide. At toy sizes
    the other factor q also decrypts every message with k2*(e2 mod q) + m < q,
    so a single probe may not separate the two.
    """
    f1, f2 = factor_semiprime(pub.e1, budget)
    if f2 == 1 or not (is_probable_prime(f1) and is_probable_prime(f2)):
        raise MalformedKeyError("e1 is not a product of two primes")
    candidates = private_key_candidates(pub, f1, f2)
    if probes:
        confirmed = [k for k in candidates if all(decrypt(k, ct) == m for ct, m in probes)]
        if not confirmed:
            raise ValueError("no factor assignment decrypts every probe")
        return confirmed[0]
    return candidates[0]
