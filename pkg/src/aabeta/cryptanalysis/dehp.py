"""Exhaustive search for the preferred integers (k1, k2) behind a ciphertext."""

from __future__ import annotations

import time
from typing import Optional

from ..cipher import Ciphertext
from ..keygen import PublicKey, SizeProfile
from .outcome import AttackOutcome, WorkBudgetExceeded, in_size_classes

MAX_KEY_BITS = 32


def bruteforce_dehp1(
    pub: PublicKey,
    ct: Ciphertext,
    profile: Optional[SizeProfile] = None,
    truth: Optional[tuple[int, int, int]] = None,
) -> AttackOutcome:
    """Every (k1, k2, m) in the size classes with k1*e1 + k2*e2 + m = C.

    Loops over k1 only; k2 follows by floor division because m < e2.
    """
    profile = profile or pub.profile
    if profile.k_bits > MAX_KEY_BITS:
        raise WorkBudgetExceeded(f"2**{profile.k_bits} session keys exceeds 2**{MAX_KEY_BITS}")
    if (1 << profile.m_bits) > pub.e2:
        raise ValueError("message bound exceeds e2; floor division would miss solutions")

    start = time.perf_counter()
    candidates = []
    for k1 in range(1, 1 << profile.k_bits):
        r = ct.c - k1 * pub.e1
        if r < 0:
            break
        k2, m = divmod(r, pub.e2)
        if in_size_classes(k1, k2, m, profile.k_bits, profile.m_bits):
            candidates.append((k1, k2, m))
    elapsed = time.perf_counter() - start

    return AttackOutcome(
        candidates=candidates,
        success=None if truth is None else tuple(truth) in candidates,
        diagnostics={"searched_log2": float(profile.k_bits), "elapsed_ms": elapsed * 1000.0},
    )
