"""Exact integer polynomial arithmetic and certified complex root isolation."""

from .poly import (
    IntPoly,
    poly_arith,
    poly_gcd,
    cyclotomic,
    roots_of_unity_factor,
    trace_polynomial,
)
from .realroots import (
    sign_at,
    count_real_roots,
    isolate_real_roots,
    refine_root_interval,
    squarefree_decomposition,
)
from .roots import CertifiedRoot, isolate_roots, unit_circle_root_count
from .irreducible import irreducible_over_Z

__all__ = [
    "IntPoly",
    "poly_arith",
    "poly_gcd",
    "cyclotomic",
    "roots_of_unity_factor",
    "trace_polynomial",
    "sign_at",
    "count_real_roots",
    "isolate_real_roots",
    "refine_root_interval",
    "squarefree_decomposition",
    "CertifiedRoot",
    "isolate_roots",
    "unit_circle_root_count",
    "irreducible_over_Z",
]
