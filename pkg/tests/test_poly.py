import pytest
from hypothesis import given
from hypothesis import strategies as st

from salemlattices.errors import NonExactDivision
from salemlattices.polycore import (
    IntPoly,
    cyclotomic,
    poly_arith,
    poly_gcd,
    roots_of_unity_factor,
    trace_polynomial,
)

small_polys = st.builds(
    IntPoly, st.lists(st.integers(min_value=-9, max_value=9), max_size=6)
)


def test_mul_monomial_shift():
    p = IntPoly([1, -3, 1])
    assert poly_arith(p, IntPoly([0, 0, 1]), "mul") == IntPoly([0, 0, 1, -3, 1])


def test_divmod_factorization_identity():
    q, r = poly_arith(IntPoly([-1, 0, 1]), IntPoly([-1, 1]), "divmod")
    assert q == IntPoly([1, 1])
    assert r.is_zero()


def test_divmod_requires_integer_results():
    # dividing the quartic by a non-factor integer quadratic leaves
    # non-integral quotient data; the integer surface must refuse
    with pytest.raises(NonExactDivision):
        divmod(IntPoly([1, -3, 3, -3, 1]), IntPoly([1, -3, 2]))


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_arith(IntPoly([1]), IntPoly([]), "divmod")


def test_symbolic_coefficients_rejected():
    # only integer coefficients are representable; anything symbolic is a
    # type error at construction time
    with pytest.raises((TypeError, ValueError)):
        IntPoly([1, "t1", 1])


def test_self_reciprocal_examples():
    assert IntPoly([1, -3, 3, -3, 1]).is_self_reciprocal()
    assert IntPoly([1, 0, -1, -1, -1, 0, 1]).is_self_reciprocal()
    assert not IntPoly([2, -3, 1]).is_self_reciprocal()


@given(small_polys)
def test_self_reciprocal_matches_identity(p):
    if p.is_zero():
        return
    # p self-reciprocal iff p(x) - x^deg p(1/x) == 0
    assert p.is_self_reciprocal() == (p - p.reciprocal()).is_zero()


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)


@given(small_polys, small_polys)
def test_divmod_reconstruction(p, q):
    if q.is_zero() or not q.is_monic():
        return
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


def test_gcd_of_common_factor():
    a = IntPoly([1, -3, 1]) * IntPoly([-1, 1])
    b = IntPoly([1, 1]) * IntPoly([-1, 1])
    assert poly_gcd(a, b) == IntPoly([-1, 1])


def test_trace_polynomial_quartic():
    # x^4 - 3x^3 + 3x^2 - 3x + 1 = x^2 * ((x + 1/x)^2 - 3(x + 1/x) + 1)
    assert trace_polynomial(IntPoly([1, -3, 3, -3, 1])) == IntPoly([1, -3, 1])


def test_trace_polynomial_reconstruction():
    # substituting y = x + 1/x back must reproduce the polynomial
    p = IntPoly([1, 0, -1, -1, -1, 0, 1])
    D = trace_polynomial(p)
    k = p.degree // 2
    x = IntPoly.x()
    acc = IntPoly.zero()
    for i, c in enumerate(D.coeffs):
        # c * x^k * (x + 1/x)^i = c * (x^2 + 1)^i * x^(k - i)
        acc = acc + c * (IntPoly([1, 0, 1]) ** i) * IntPoly.monomial(1, k - i)
    assert acc == p


def test_cyclotomic_basics():
    assert cyclotomic(1) == IntPoly([-1, 1])
    assert cyclotomic(6) == IntPoly([1, -1, 1])
    assert cyclotomic(12).degree == 4


def test_roots_of_unity_factor_examples():
    p = IntPoly([-1, 1]) ** 2 * IntPoly([1, -3, 1])
    assert roots_of_unity_factor(p) == IntPoly([-1, 1]) ** 2
    assert roots_of_unity_factor(IntPoly([1, -3, 1])) == IntPoly.one()
    assert roots_of_unity_factor(IntPoly([1, 1, 1])) == IntPoly([1, 1, 1])


def test_json_round_trip():
    p = IntPoly([1, 0, -1, -1, -1, 0, 1])
    assert IntPoly.from_json(p.to_json()) == p
    assert p.to_json()[0] == "1"  # constant term first
