"""AA_beta key material: size classes, generation, validation and the
factor <-> secret reconstructions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .numeric import RandomSource, bit_length, generate_prime, is_probable_prime

STRICT_MIN_N = 128
TOY_MIN_N = 8

STRICT = "strict"
TOY = "toy"


class KeygenError(RuntimeError):
    """Key generation could not satisfy its constraints within budget."""


@dataclass(frozen=True)
class SizeProfile:
    """Bit lengths derived from the prime size ``n``."""

    n: int
    v_bits: int
    k_bits: int
    m_bits: int
    key_bits: int

    @property
    def strict_admissible(self) -> bool:
        # m < v and k2*v + m < p follow from the size classes alone.
        return self.m_bits <= self.v_bits - 1 and self.k_bits + self.v_bits <= self.n - 2


def derive_size_profile(n: int) -> SizeProfile:
    if n < TOY_MIN_N:
        raise ValueError(f"n must be >= {TOY_MIN_N}")
    return SizeProfile(
        n=n,
        v_bits=math.ceil(13 * n / 16),
        k_bits=math.ceil(n / 6),
        m_bits=math.ceil(4 * n / 5),
        key_bits=2 * n,
    )


@dataclass(frozen=True)
class EphemeralSecrets:
    a1: int
    a2: int
    a3: int


@dataclass(frozen=True)
class PublicKey:
    e1: int
    e2: int
    n: int

    @property
    def profile(self) -> SizeProfile:
        return derive_size_profile(self.n)


@dataclass(frozen=True)
class PrivateKey:
    p: int
    v: int
    n: int

    @property
    def profile(self) -> SizeProfile:
        return derive_size_profile(self.n)


def decrypt_guard_holds(p: int, v: int, profile: SizeProfile) -> bool:
    """Worst case k2*v + m < p over all in-range session keys and messages."""
    return ((1 << profile.k_bits) - 1) * v + (1 << profile.m_bits) - 1 < p


@dataclass(frozen=True)
class KeyPair:
    public: PublicKey
    private: PrivateKey
    secrets: Optional[EphemeralSecrets] = None
    mode: str = STRICT

    @property
    def guard_ok(self) -> bool:
        return decrypt_guard_holds(self.private.p, self.private.v, self.private.profile)


def _lift_a3(rng: Optional[RandomSource], residue: int, p: int, a1: int, n: int) -> int:
    # a3 = residue + t*p with e2 = a1 + a3 exactly 2n bits and a3 > 0
    lo = max((1 << (2 * n - 1)) - a1, 1)
    hi = (1 << (2 * n)) - 1 - a1
    t_min = max(-((residue - lo) // p), 0)
    t_max = (hi - residue) // p
    if t_max < t_min:
        raise KeygenError("no a3 lift gives a 2n-bit e2 for these factors")
    if rng is None:
        return residue + t_min * p
    return residue + rng.randrange(t_min, t_max + 1) * p


def build_keypair(
    p: int,
    q: int,
    v: int,
    a3: Optional[int] = None,
    *,
    n: Optional[int] = None,
    rng: Optional[RandomSource] = None,
    mode: str = STRICT,
) -> KeyPair:
    """Assemble a key pair from chosen factors and v.

    If ``a3`` is omitted it is lifted from the residue ``(v - a2) mod p``.
    """
    if n is None:
        n = p.bit_length()
    a1 = p * (q + 1) // 2
    a2 = p * (q - 1) // 2
    if a3 is None:
        a3 = _lift_a3(rng, (v - a2) % p, p, a1, n)
    return KeyPair(
        public=PublicKey(e1=a1 + a2, e2=a1 + a3, n=n),
        private=PrivateKey(p=p, v=v, n=n),
        secrets=EphemeralSecrets(a1=a1, a2=a2, a3=a3),
        mode=mode,
    )


def keygen(rng: RandomSource, n: int = 512, mode: str = STRICT, attempts: int = 64) -> KeyPair:
    """Generate a key pair.

    Strict mode (n >= 128) guarantees decryption for every in-range message
    and session key, resampling v until the worst-case guard holds. Toy mode
    accepts small n for experiments; the guard is tried for but may fail, in
    which case the returned pair reports ``guard_ok == False``.
    """
    if mode not in (STRICT, TOY):
        raise ValueError(f"unknown mode {mode!r}")
    floor = STRICT_MIN_N if mode == STRICT else TOY_MIN_N
    if n < floor:
        raise ValueError(f"{mode} mode requires n >= {floor}")
    profile = derive_size_profile(n)

    fallback = None
    for _ in range(attempts):
        p = generate_prime(rng, n)
        q = generate_prime(rng, n)
        if p == q:
            continue
        for _ in range(16):
            v = (1 << (profile.v_bits - 1)) | rng.getrandbits(profile.v_bits - 1)
            if decrypt_guard_holds(p, v, profile):
                return build_keypair(p, q, v, n=n, rng=rng, mode=mode)
        if mode == TOY and fallback is None:
            fallback = (p, q, v)
    if fallback is not None:
        p, q, v = fallback
        return build_keypair(p, q, v, n=n, rng=rng, mode=mode)
    raise KeygenError(f"could not satisfy the decryption guard at n={n}")


def reconstruct_from_factors(p: int, q: int, e2: int) -> tuple[EphemeralSecrets, int]:
    """Rebuild (a1, a2, a3) and v from the factorisation of e1."""
    for f in (p, q):
        if f % 2 == 0 or not is_probable_prime(f):
            raise ValueError(f"{f} is not an odd prime")
    a1 = p * (q + 1) // 2
    a2 = p * (q - 1) // 2
    a3 = e2 - a1
    if a3 < 0:
        raise ValueError("e2 < a1: these factors cannot have produced this key")
    return EphemeralSecrets(a1=a1, a2=a2, a3=a3), e2 % p


def recover_factors(a1: int, a2: int, e1: int) -> tuple[int, int]:
    """Factor e1 given the preferred integers a1, a2."""
    if a1 <= a2:
        raise ValueError("need a1 > a2")
    p = a1 - a2
    if e1 % p:
        raise ValueError("a1 - a2 does not divide e1")
    q = e1 // p
    if not (is_probable_prime(p) and is_probable_prime(q)):
        raise ValueError(f"degenerate split {p} * {q}: factors must be prime")
    return p, q


@dataclass
class ValidationReport:
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, passed in self.checks.items() if not passed]

    def __str__(self) -> str:
        return "\n".join(f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in self.checks.items())


def validate_keypair(kp: KeyPair) -> ValidationReport:
    pub, priv, sec = kp.public, kp.private, kp.secrets
    n, p, v = priv.n, priv.p, priv.v
    profile = priv.profile
    q, rem = divmod(pub.e1, p) if p > 0 else (0, 1)

    checks: dict[str, bool] = {}
    if sec is not None:
        diff = sec.a1 - sec.a2
        checks["eq1"] = diff > 0 and (sec.a1 + sec.a2) % diff == 0
        checks["eq2"] = diff == p and (sec.a2 + sec.a3 - v) % p == 0 and (pub.e2 - v) % p == 0
        checks["e2_is_a1_plus_a3"] = pub.e2 == sec.a1 + sec.a3
        checks["e1_is_pq"] = rem == 0 and sec.a1 + sec.a2 == pub.e1 and is_probable_prime(q) and q != p
    else:
        checks["eq1"] = rem == 0
        checks["eq2"] = p > 0 and (pub.e2 - v) % p == 0
        checks["e1_is_pq"] = rem == 0 and is_probable_prime(q) and q != p
    checks["p_prime"] = is_probable_prime(p)
    checks["bit_lengths"] = (
        pub.n == n
        and bit_length(p) == n
        and bit_length(q) == n
        and bit_length(v) == profile.v_bits
        and bit_length(pub.e1) in (2 * n - 1, 2 * n)
        and bit_length(pub.e2) == 2 * n
    )
    checks["decrypt_guard"] = decrypt_guard_holds(p, v, profile)
    return ValidationReport(checks)
