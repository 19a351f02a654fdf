import random
from fractions import Fraction

import pytest
import sympy

from salemlattices.linalg import (
    charpoly,
    companion_matrix,
    det,
    hnf_rows,
    hnf_rows_rational,
    identity,
    inverse,
    mat_mul,
    mat_pow,
    nullspace,
    rank,
    rref,
    solve,
)
from salemlattices.polycore import IntPoly


def _random_matrix(rng, n, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def test_det_inverse_against_sympy():
    rng = random.Random(1)
    for _ in range(25):
        n = rng.randint(1, 5)
        m = _random_matrix(rng, n)
        sm = sympy.Matrix(m)
        assert det(m) == sm.det()
        if sm.det() != 0:
            inv = inverse(m)
            assert mat_mul(m, inv) == identity(n)


def test_charpoly_against_sympy():
    rng = random.Random(2)
    x = sympy.Symbol("x")
    for _ in range(20):
        n = rng.randint(1, 5)
        m = _random_matrix(rng, n)
        ours = charpoly(m)
        theirs = sympy.Matrix(m).charpoly(x).as_expr()
        theirs_coeffs = sympy.Poly(theirs, x).all_coeffs()[::-1]
        assert list(ours.coeffs) == [int(c) for c in theirs_coeffs]


def test_companion_char_poly_roundtrip():
    rng = random.Random(3)
    for _ in range(100):
        deg = rng.randint(1, 8)
        f = IntPoly([rng.randint(-20, 20) for _ in range(deg)] + [1])
        assert charpoly(companion_matrix(f)) == f


def test_mat_pow_negative():
    m = [[0, -1], [1, 3]]
    assert mat_mul(mat_pow(m, -2), mat_pow(m, 2)) == identity(2)


def test_rank_nullspace_solve():
    m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rank(m) == 2
    ns = nullspace(m)
    assert len(ns) == 1
    v = ns[0]
    assert all(sum(row[j] * v[j] for j in range(3)) == 0 for row in m)
    sol = solve([[1, 1], [1, -1]], [3, 1])
    assert sol == [Fraction(2), Fraction(1)]
    assert solve([[1, 1], [1, 1]], [0, 1]) is None


def test_hnf_canonical_example():
    assert hnf_rows([[3, 0], [2, 6]]) == [[1, 12], [0, 18]]


def _sympy_row_span_canon(rows):
    from sympy.matrices.normalforms import hermite_normal_form

    m = sympy.Matrix([r for r in rows if any(r)])
    if m.rows == 0:
        return None
    return hermite_normal_form(m.T).T


def test_hnf_preserves_row_span():
    # sympy's Hermite form of the span is a complete invariant, so equal
    # canonical forms certify equal integer row spans
    rng = random.Random(4)
    for _ in range(30):
        rows = [
            [rng.randint(-9, 9) for _ in range(3)] for _ in range(rng.randint(1, 4))
        ]
        basis = hnf_rows(rows)
        assert _sympy_row_span_canon(rows) == _sympy_row_span_canon(basis)
        # echelon shape with positive pivots, reduced above
        pivots = []
        for row in basis:
            pc = next(i for i, x in enumerate(row) if x)
            assert row[pc] > 0
            assert all(pc > prev for prev in pivots[-1:] or [-1])
            pivots.append(pc)
        for i, pc in enumerate(pivots):
            for j in range(i):
                assert 0 <= basis[j][pc] < basis[i][pc]


def test_hnf_rational_scaling():
    basis = hnf_rows_rational([[Fraction(1, 2), 0], [Fraction(1, 3), 1]])
    assert basis == [[Fraction(1, 6), Fraction(2)], [Fraction(0), Fraction(3)]]


def test_rref_pivots():
    r, pivots = rref([[0, 2], [0, 0]])
    assert pivots == [1]
    assert r[0] == [Fraction(0), Fraction(1)]
