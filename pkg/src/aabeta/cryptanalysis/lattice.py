"""Message lattice and exact-arithmetic LLL.

The ciphertext relation C = k1*e1 + k2*e2 + m puts (k1, k2, -m) in the
lattice spanned by (1, 0, e1), (0, 1, e2), (0, 0, C). LLL finds it only if it
is unusually short for that lattice.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from ..cipher import Ciphertext
from ..keygen import PublicKey, SizeProfile
from ..numeric import approx_log2
from .heuristics import gaussian_heuristic, target_vector_norm
from .outcome import AttackOutcome, in_size_classes

Vector = tuple[int, ...]


@dataclass(frozen=True)
class LatticeBasis:
    rows: tuple[Vector, ...]

    def __post_init__(self):
        dims = {len(r) for r in self.rows}
        if len(dims) != 1:
            raise ValueError("rows must share one dimension")

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def determinant(self) -> int:
        """Determinant of a square basis (fraction-free Bareiss elimination)."""
        d = len(self.rows)
        if len(self.rows[0]) != d:
            raise ValueError("determinant needs a square basis")
        a = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for k in range(d - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, d) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, d):
                for j in range(k + 1, d):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[d - 1][d - 1]


def _dot(x: Sequence, y: Sequence):
    return sum(a * b for a, b in zip(x, y))


def gram_schmidt(rows: Sequence[Sequence[int]]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Exact Gram-Schmidt: returns (mu, squared norms of the b*_i).

    ``mu[i][j]`` for j < i; the diagonal is 1 by convention.
    """
    d = len(rows)
    star: list[list[Fraction]] = []
    norms: list[Fraction] = []
    mu = [[Fraction(0)] * d for _ in range(d)]
    for i, b in enumerate(rows):
        v = [Fraction(x) for x in b]
        for j in range(i):
            mu[i][j] = _dot(b, star[j]) / norms[j]
            v = [x - mu[i][j] * y for x, y in zip(v, star[j])]
        mu[i][i] = Fraction(1)
        norm = _dot(v, v)
        if norm == 0:
            raise ValueError("basis rows are linearly dependent")
        star.append(v)
        norms.append(norm)
    return mu, norms


def _as_fraction(delta: Union[float, Fraction, str]) -> Fraction:
    if isinstance(delta, float):
        return Fraction(repr(delta))
    return Fraction(delta)


def is_lll_reduced(rows: Sequence[Sequence[int]], delta: Union[float, Fraction] = 0.99) -> bool:
    delta = _as_fraction(delta)
    mu, norms = gram_schmidt(rows)
    half = Fraction(1, 2)
    for i in range(len(rows)):
        if any(abs(mu[i][j]) > half for j in range(i)):
            return False
    return all(
        norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1] for k in range(1, len(rows))
    )


def lll_reduce(
    basis: Union[LatticeBasis, Sequence[Sequence[int]]], delta: Union[float, Fraction] = 0.99
) -> LatticeBasis:
    rows = basis.rows if isinstance(basis, LatticeBasis) else basis
    delta = _as_fraction(delta)
    if not Fraction(1, 4) < delta <= 1:
        raise ValueError("delta must lie in (1/4, 1]")
    b = [list(map(int, r)) for r in rows]
    d = len(b)
    mu, norms = gram_schmidt(b)
    k = 1
    while k < d:
        for j in range(k - 1, -1, -1):
            r = round(mu[k][j])
            if r:
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                for i in range(j + 1):
                    mu[k][i] -= r * mu[j][i]
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k - 1], b[k] = b[k], b[k - 1]
            mu, norms = gram_schmidt(b)
            k = max(k - 1, 1)
    return LatticeBasis(tuple(tuple(r) for r in b))


def build_message_lattice(pub: PublicKey, ct: Ciphertext) -> LatticeBasis:
    if ct.c <= 0:
        raise ValueError("ciphertext must be positive")
    return LatticeBasis(((1, 0, pub.e1), (0, 1, pub.e2), (0, 0, ct.c)))


def vector_norm_log2(vec: Sequence[int]) -> float:
    return 0.5 * approx_log2(sum(x * x for x in vec))


def lattice_attack(
    pub: PublicKey,
    ct: Ciphertext,
    profile: Optional[SizeProfile] = None,
    delta: Union[float, Fraction] = 0.99,
    truth: Optional[tuple[int, int, int]] = None,
) -> AttackOutcome:
    """Reduce the message lattice and look for (k1, k2, -m) among the rows.

    Without ``truth`` the target norm is estimated from the message size
    class, an upper estimate since the norm is dominated by m.
    """
    profile = profile or pub.profile
    start = time.perf_counter()
    reduced = lll_reduce(build_message_lattice(pub, ct), delta)
    elapsed = time.perf_counter() - start

    candidates = []
    for row in reduced.rows:
        for sign in (1, -1):
            k1, k2, m = sign * row[0], sign * row[1], -sign * row[2]
            if (
                in_size_classes(k1, k2, m, profile.k_bits, profile.m_bits)
                and k1 * pub.e1 + k2 * pub.e2 + m == ct.c
                and (k1, k2, m) not in candidates
            ):
                candidates.append((k1, k2, m))

    target = target_vector_norm(*truth) if truth else float(profile.m_bits)
    return AttackOutcome(
        candidates=candidates,
        success=None if truth is None else tuple(truth) in candidates,
        diagnostics={
            "sigma_log2": gaussian_heuristic(ct.c),
            "target_norm_log2": target,
            "first_vector_log2": vector_norm_log2(reduced.rows[0]),
            "elapsed_ms": elapsed * 1000.0,
        },
    )
