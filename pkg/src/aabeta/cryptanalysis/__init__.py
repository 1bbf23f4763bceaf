"""Attacks and security estimates against AA_beta."""

from .dehp import bruteforce_dehp1
from .factoring import (
    MalformedKeyError,
    factor_semiprime,
    factoring_attack,
    pollard_rho,
    private_key_candidates,
)
from .heuristics import (
    CoppersmithParams,
    coppersmith_bound,
    coppersmith_cases,
    gaussian_heuristic,
    target_vector_norm,
)
from .lattice import (
    LatticeBasis,
    build_message_lattice,
    gram_schmidt,
    is_lll_reduced,
    lattice_attack,
    lll_reduce,
)
from .outcome import AttackOutcome, WorkBudgetExceeded

__all__ = [
    "AttackOutcome",
    "CoppersmithParams",
    "LatticeBasis",
    "MalformedKeyError",
    "WorkBudgetExceeded",
    "bruteforce_dehp1",
    "build_message_lattice",
    "coppersmith_bound",
    "coppersmith_cases",
    "factor_semiprime",
    "factoring_attack",
    "gaussian_heuristic",
    "gram_schmidt",
    "is_lll_reduced",
    "lattice_attack",
    "lll_reduce",
    "pollard_rho",
    "private_key_candidates",
    "target_vector_norm",
]
