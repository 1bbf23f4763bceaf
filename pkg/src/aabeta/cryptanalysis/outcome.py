from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


class WorkBudgetExceeded(RuntimeError):
    """An attack was refused or abandoned because of its work bound."""


@dataclass
class AttackOutcome:
    """Candidate (k1, k2, m) triples plus diagnostics.

    ``success`` is only known when the caller supplied the true triple.
    """

    candidates: list[tuple[int, int, int]] = field(default_factory=list)
    success: Optional[bool] = None
    diagnostics: dict[str, float] = field(default_factory=dict)

    def report(self) -> str:
        lines = [f"candidates: {len(self.candidates)}"]
        lines += [f"candidate: k1={k1} k2={k2} m={m}" for k1, k2, m in self.candidates]
        for key, value in self.diagnostics.items():
            lines.append(f"{key}: {value:.4f}" if isinstance(value, float) else f"{key}: {value}")
        lines.append(f"success: {'unknown' if self.success is None else str(self.success).lower()}")
        return "\n".join(lines) + "\n"


def in_size_classes(k1: int, k2: int, m: int, k_bits: int, m_bits: int) -> bool:
    top = 1 << k_bits
    return 1 <= k1 < top and 1 <= k2 < top and 0 <= m < 1 << m_bits
