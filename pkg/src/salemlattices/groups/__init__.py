"""Exact and numeric models of the three group families, the closed-form
group laws, the truncated-commutator cross-check and the lattice builders."""

from .osc1 import Osc1Numeric, conjugating_basis, osc1_mul
from .twocentre import (
    D0_UNITS,
    DQ_UNITS,
    DqExact,
    DqNumeric,
    Osc2Exact,
    Osc2Numeric,
    dq_mul,
    osc2_mul,
)
from .bch import bch_crosscheck_Ell
from .lattices import (
    ClosureReport,
    LatticeModel,
    build_lattice_T1,
    build_lattice_T2,
    closure_check,
    lattice_from_json,
)

__all__ = [
    "Osc1Numeric",
    "conjugating_basis",
    "osc1_mul",
    "Osc2Exact",
    "Osc2Numeric",
    "DqExact",
    "DqNumeric",
    "DQ_UNITS",
    "D0_UNITS",
    "osc2_mul",
    "dq_mul",
    "bch_crosscheck_Ell",
    "LatticeModel",
    "ClosureReport",
    "build_lattice_T1",
    "build_lattice_T2",
    "closure_check",
    "lattice_from_json",
]
