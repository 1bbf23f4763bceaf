"""Size estimates: Gaussian heuristic, target-vector norm, Coppersmith radius.

All results are base-2 logarithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..keygen import PublicKey
from ..numeric import approx_log2

# log2 of sqrt(3 / (2*pi*e)), the 3-dimensional Gaussian heuristic constant
GH3_LOG2 = 0.5 * math.log2(3 / (2 * math.pi * math.e))


def gaussian_heuristic(c: int) -> float:
    """log2 sigma(L) for the 3-dim message lattice of determinant ``c``."""
    if c < 1:
        raise ValueError("C must be >= 1")
    return GH3_LOG2 + approx_log2(c) / 3


def target_vector_norm(k1: int, k2: int, m: int) -> float:
    if min(k1, k2, m) < 0:
        raise ValueError("components must be non-negative")
    sq = k1 * k1 + k2 * k2 + m * m
    if sq == 0:
        raise ValueError("zero vector has no log-norm")
    return 0.5 * approx_log2(sq)


@dataclass(frozen=True)
class CoppersmithParams:
    beta: float
    delta: int
    epsilon: float
    N: int

    def __post_init__(self):
        if not 0 < self.beta <= 1:
            raise ValueError("beta must be in (0, 1]")
        if self.delta < 1:
            raise ValueError("polynomial degree must be >= 1")
        if self.epsilon < 0:
            raise ValueError("epsilon must be >= 0")
        if self.N < 2:
            raise ValueError("N must be >= 2")


def coppersmith_bound(params: CoppersmithParams) -> float:
    """log2 of (1/2) * N**(beta**2/delta - epsilon)."""
    exponent = params.beta**2 / params.delta - params.epsilon
    if exponent <= 0:
        raise ValueError("bound exponent <= 0: the root bound degenerates")
    return exponent * approx_log2(params.N) - 1


def coppersmith_cases(pub: PublicKey, epsilon: float = 0.0) -> dict[str, float]:
    """Root bounds for recovering v mod p from e1 = pq, beta = 1/2.

    ``quadratic`` uses x^2 - e2*x + e1 (degree 2), ``linear`` uses x - e2.
    Compare both against ``v_bits``.
    """
    return {
        "quadratic": coppersmith_bound(CoppersmithParams(0.5, 2, epsilon, pub.e1)),
        "linear": coppersmith_bound(CoppersmithParams(0.5, 1, epsilon, pub.e1)),
        "v_bits": float(pub.profile.v_bits),
    }
