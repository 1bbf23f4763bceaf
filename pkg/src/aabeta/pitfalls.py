"""Two broken designs that a passive eavesdropper defeats.

1. Matrix key exchange over a singular public generator G: any A' with
   A'G = AG yields the shared key, and such an A' is easy to write down.
2. e_A = a1 + a2*g1 with g1 much larger than a1: floor division by g1
   gives a2 and the remainder is a1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .numeric import RandomSource, random_exact_bits

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Matrix2:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @classmethod
    def of(cls, a: Number, b: Number, c: Number, d: Number) -> "Matrix2":
        return cls(Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def rank(self) -> int:
        if self.det() != 0:
            return 2
        return 0 if not any((self.a, self.b, self.c, self.d)) else 1

    def column(self, j: int) -> tuple[Fraction, Fraction]:
        return (self.a, self.c) if j == 0 else (self.b, self.d)

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return mat_mul(self, other)

    def __str__(self) -> str:
        def fmt(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else str(x)

        return f"({fmt(self.a)},{fmt(self.b)};{fmt(self.c)},{fmt(self.d)})"


IDENTITY = Matrix2.of(1, 0, 0, 1)


def mat_mul(x: Matrix2, y: Matrix2) -> Matrix2:
    return Matrix2(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


@dataclass(frozen=True)
class KeyExchange:
    E_A: Matrix2
    E_B: Matrix2
    key_A: Matrix2
    key_B: Matrix2


def keyexchange_simulate(G: Matrix2, A: Matrix2, B: Matrix2) -> KeyExchange:
    if G.det() != 0:
        raise ValueError("generator must be singular")
    if A.det() == 0 or B.det() == 0:
        raise ValueError("private matrices must be non-singular")
    E_A, E_B = A @ G, G @ B
    return KeyExchange(E_A=E_A, E_B=E_B, key_A=A @ E_B, key_B=E_A @ B)


def forge_equivalent_secret(E_A: Matrix2, G: Matrix2) -> Matrix2:
    """Some A' with A' G = E_A, found from public values only.

    G has rank 1, so its columns are lam_j * g for one column g. Then
    A' G = E_A reduces to A' g = w with E_A's columns equal to lam_j * w.
    The column of A' that g does not need is left zero.
    """
    if G.rank() != 1:
        raise ValueError("forgery needs a rank-1 generator")
    j0 = 0 if any(G.column(0)) else 1
    g = G.column(j0)
    w = E_A.column(j0)
    for j in (0, 1):
        col = G.column(j)
        # G's column j as a multiple of g
        i = 0 if g[0] != 0 else 1
        lam = col[i] / g[i]
        expected = (lam * w[0], lam * w[1])
        if E_A.column(j) != expected:
            raise ValueError("E_A is not of the form A G for this generator")
    if g[0] != 0:
        return Matrix2(w[0] / g[0], Fraction(0), w[1] / g[0], Fraction(0))
    return Matrix2(Fraction(0), w[0] / g[1], Fraction(0), w[1] / g[1])


def improper_size_attack(e_A: int, g1: int) -> tuple[int, int]:
    """(a2, a1) from e_A = a1 + a2*g1, exact whenever 0 <= a1 < g1."""
    a2, a1 = divmod(e_A, g1)
    return a2, a1


# The 2x2 reference example.
EXAMPLE_G = Matrix2.of(1, 2, 2, 4)
EXAMPLE_A = Matrix2.of(2, 3, 4, 5)
EXAMPLE_B = Matrix2.of(7, 8, 9, 10)
EXAMPLE_E_A = Matrix2.of(7, 14, 14, 28)
EXAMPLE_E_B = Matrix2.of(25, 28, 50, 56)
EXAMPLE_SHARED = Matrix2.of(175, 196, 350, 392)


def keyexchange_transcript() -> str:
    """The reference forgery, replayed, plus a run with the stated A."""
    forged = forge_equivalent_secret(EXAMPLE_E_A, EXAMPLE_G)
    forged_key = forged @ EXAMPLE_E_B
    run = keyexchange_simulate(EXAMPLE_G, EXAMPLE_A, EXAMPLE_B)
    lines = [
        f"G   = {EXAMPLE_G}",
        f"A   = {EXAMPLE_A}",
        f"B   = {EXAMPLE_B}",
        f"E_A = {EXAMPLE_E_A}  (as given)",
        f"E_B = {run.E_B}",
        f"A'  = {forged}  (forged from E_A and G)",
        f"A'G = {forged @ EXAMPLE_G}",
        f"key from E_A*B = {EXAMPLE_E_A @ EXAMPLE_B}",
        f"key from A'*E_B = {forged_key}",
        f"forgery: {'SUCCESS' if forged_key == EXAMPLE_E_A @ EXAMPLE_B else 'FAILED'}",
    ]
    if run.E_A != EXAMPLE_E_A:
        lines += [
            f"WARNING: A*G = {run.E_A} with the given A, not the given E_A {EXAMPLE_E_A}.",
            "The given E_A equals (1,3;2,6)*G, and (1,3;2,6) is singular.",
            f"Protocol with the given A: E_A = {run.E_A}, shared key = {run.key_A}"
            f" (both sides agree: {run.key_A == run.key_B}).",
        ]
        forged_run = forge_equivalent_secret(run.E_A, EXAMPLE_G)
        lines.append(
            f"Forgery against that run: A' = {forged_run}, key = {forged_run @ run.E_B}"
            f" ({'SUCCESS' if forged_run @ run.E_B == run.key_A else 'FAILED'})"
        )
    return "\n".join(lines) + "\n"


def improper_size_transcript(rng: RandomSource, n: int = 64) -> str:
    g1 = random_exact_bits(rng, 2 * n)
    a1 = random_exact_bits(rng, n)
    a2 = random_exact_bits(rng, n)
    e_A = a1 + a2 * g1
    got_a2, got_a1 = improper_size_attack(e_A, g1)
    ok = (got_a1, got_a2) == (a1, a2)
    return (
        f"g1 = {g1}\ne_A = {e_A}\n"
        f"a2 = floor(e_A / g1) = {got_a2}\na1 = e_A mod g1 = {got_a1}\n"
        f"recovery: {'SUCCESS' if ok else 'FAILED'}\n"
    )
