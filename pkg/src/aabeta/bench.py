"""Cost and expansion measurements.

Timing is machine dependent, so the deterministic claims (operation counts,
expansion arithmetic) are exposed separately from the wall-clock report.
"""

from __future__ import annotations

import math
import statistics
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cipher import Ciphertext, SessionKeys, decrypt, encrypt_with_keys, sample_session_keys
from .keygen import KeyPair, PrivateKey, PublicKey, keygen
from .numeric import RandomSource, random_exact_bits


class OpCounter:
    """Counts arithmetic performed on integers wrapped with :meth:`wrap`."""

    def __init__(self):
        self.counts: Counter = Counter()

    def wrap(self, value: int) -> "CountingInt":
        return CountingInt(value, self)


class CountingInt(int):
    def __new__(cls, value: int, counter: OpCounter):
        obj = super().__new__(cls, value)
        obj.counter = counter
        return obj

    def _op(self, name: str, result: int) -> "CountingInt":
        self.counter.counts[name] += 1
        return CountingInt(result, self.counter)

    def __add__(self, other):
        return self._op("add", int(self) + int(other))

    def __radd__(self, other):
        return self._op("add", int(other) + int(self))

    def __sub__(self, other):
        return self._op("sub", int(self) - int(other))

    def __rsub__(self, other):
        return self._op("sub", int(other) - int(self))

    def __mul__(self, other):
        return self._op("mul", int(self) * int(other))

    def __rmul__(self, other):
        return self._op("mul", int(other) * int(self))

    def __mod__(self, other):
        return self._op("mod", int(self) % int(other))

    def __rmod__(self, other):
        return self._op("mod", int(other) % int(self))

    def __floordiv__(self, other):
        return self._op("div", int(self) // int(other))

    def __rfloordiv__(self, other):
        return self._op("div", int(other) // int(self))

    def __pow__(self, other, mod=None):
        return self._op("pow", pow(int(self), int(other), mod))


def count_encrypt_ops(pub: PublicKey, m: int, keys: SessionKeys) -> Counter:
    counter = OpCounter()
    counted = PublicKey(e1=counter.wrap(pub.e1), e2=counter.wrap(pub.e2), n=pub.n)
    encrypt_with_keys(counted, m, keys)
    return counter.counts


def count_decrypt_ops(priv: PrivateKey, ct: Ciphertext) -> Counter:
    counter = OpCounter()
    counted = PrivateKey(p=counter.wrap(priv.p), v=counter.wrap(priv.v), n=priv.n)
    decrypt(counted, ct)
    return counter.counts


def square_and_multiply(base: int, exponent: int, modulus: int) -> int:
    """Left-to-right binary exponentiation, no windowing."""
    result = 1
    base %= modulus
    for bit in bin(exponent)[2:]:
        result = result * result % modulus
        if bit == "1":
            result = result * base % modulus
    return result


def expansion_ratio(pub: PublicKey) -> float:
    """Ciphertext bits per plaintext bit: (bits(e1) + k_bits) / m_bits."""
    profile = pub.profile
    return (pub.e1.bit_length() + profile.k_bits) / profile.m_bits


@dataclass
class BenchRow:
    n: int
    encrypt_us: float
    decrypt_us: float
    modexp_us: float
    expansion: float


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    trials: int = 0

    def exponent(self, column: str) -> Optional[float]:
        """Slope of log(time) against log(n); None with fewer than two sizes."""
        if len(self.rows) < 2:
            return None
        fit = statistics.linear_regression(
            [math.log(r.n) for r in self.rows], [math.log(getattr(r, column)) for r in self.rows]
        )
        return fit.slope

    @property
    def exponents(self) -> dict[str, Optional[float]]:
        return {c: self.exponent(c) for c in ("encrypt_us", "decrypt_us", "modexp_us")}

    def to_csv(self) -> str:
        lines = ["n,enc_us,dec_us,modexp_us,expansion"]
        lines += [
            f"{r.n},{r.encrypt_us:.3f},{r.decrypt_us:.3f},{r.modexp_us:.3f},{r.expansion:.4f}"
            for r in self.rows
        ]
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        head = f"{'n':>6} {'enc_us':>12} {'dec_us':>12} {'modexp_us':>14} {'expansion':>10}"
        lines = [head, "-" * len(head)]
        for r in self.rows:
            lines.append(
                f"{r.n:>6} {r.encrypt_us:>12.3f} {r.decrypt_us:>12.3f}"
                f" {r.modexp_us:>14.3f} {r.expansion:>10.4f}"
            )
        for column, slope in self.exponents.items():
            shown = "n/a" if slope is None else f"{slope:.3f}"
            lines.append(f"fitted exponent {column}: {shown}")
        lines.append(f"trials per row: {self.trials}")
        return "\n".join(lines) + "\n"


def _median_us(fn, trials: int) -> float:
    samples = []
    for _ in range(trials):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples) * 1e6


def bench_size(kp: KeyPair, trials: int, rng: RandomSource) -> BenchRow:
    pub, priv = kp.public, kp.private
    n = pub.n
    m = rng.getrandbits(pub.profile.m_bits)
    keys = sample_session_keys(rng, pub)
    ct = encrypt_with_keys(pub, m, keys)
    modulus = random_exact_bits(rng, 2 * n) | 1
    exponent = random_exact_bits(rng, 2 * n)
    base = rng.randrange(2, modulus)
    return BenchRow(
        n=n,
        encrypt_us=_median_us(lambda: encrypt_with_keys(pub, m, keys), trials),
        decrypt_us=_median_us(lambda: decrypt(priv, ct), trials),
        modexp_us=_median_us(lambda: square_and_multiply(base, exponent, modulus), trials),
        expansion=expansion_ratio(pub),
    )


def run_bench(sizes: Sequence[int], trials: int = 100, rng: Optional[RandomSource] = None) -> BenchReport:
    rng = rng or RandomSource()
    report = BenchReport(trials=trials)
    for n in sorted(sizes):
        report.rows.append(bench_size(keygen(rng, n), trials, rng))
    return report
