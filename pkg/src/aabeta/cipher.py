"""Single-block encryption C = k1*e1 + k2*e2 + m and its decryption."""

from __future__ import annotations

from dataclasses import dataclass

from .keygen import PrivateKey, PublicKey
from .numeric import RandomSource


@dataclass(frozen=True)
class SessionKeys:
    k1: int
    k2: int


@dataclass(frozen=True)
class Ciphertext:
    c: int
    n: int


def _check_message(pub: PublicKey, m: int) -> None:
    if not 0 <= m < 1 << pub.profile.m_bits:
        raise ValueError(f"message out of range: need 0 <= m < 2**{pub.profile.m_bits}")


def sample_session_keys(rng: RandomSource, pub: PublicKey) -> SessionKeys:
    top = 1 << pub.profile.k_bits
    return SessionKeys(rng.randrange(1, top), rng.randrange(1, top))


def encrypt_with_keys(
    pub: PublicKey, m: int, keys: SessionKeys, *, allow_zero_keys: bool = False
) -> Ciphertext:
    """Deterministic encryption under caller-chosen session keys.

    ``allow_zero_keys`` admits k1 = k2 = 0, which is only useful in tests.
    """
    _check_message(pub, m)
    low = 0 if allow_zero_keys else 1
    top = 1 << pub.profile.k_bits
    for k in (keys.k1, keys.k2):
        if not low <= k < top:
            raise ValueError(f"session key {k} out of range [{low}, 2**{pub.profile.k_bits})")
    c = keys.k1 * pub.e1 + keys.k2 * pub.e2 + m
    return Ciphertext(c=c, n=pub.n)


def encrypt(rng: RandomSource, pub: PublicKey, m: int) -> Ciphertext:
    _check_message(pub, m)
    return encrypt_with_keys(pub, m, sample_session_keys(rng, pub))


def decrypt(priv: PrivateKey, ct: Ciphertext) -> int:
    """Recover m as (C mod p) mod v.

    There is no integrity check: the wrong key simply yields garbage.
    """
    return ct.c % priv.p % priv.v
