"""Exact real-root counting, isolation and refinement via Sturm sequences.

Everything works on integer polynomials with Fraction sample points; signs
are computed with pure integer arithmetic, so there is no rounding anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import ToleranceNotReached
from ..intervals import RatInterval, as_fraction
from .poly import IntPoly, poly_gcd, qdivmod


def sign_at(p: IntPoly, x) -> int:
    """Sign of p(x) at a rational point, via integer Horner evaluation.

    p(n/d) * d^deg = sum a_i n^i d^(deg-i), an integer with the same sign
    (d > 0), so no Fraction arithmetic is needed.
    """
    x = as_fraction(x)
    if p.is_zero():
        return 0
    n, d = x.numerator, x.denominator
    acc = 0
    dp = 1
    for c in reversed(p.coeffs):
        acc = acc * n + c * dp
        dp *= d
    return (acc > 0) - (acc < 0)


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm chain with primitive integer entries.

    Remainders are normalized by positive scalars only, which preserves the
    sign pattern the root count depends on.
    """
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [_positive_primitive(p)]
    d = p.derivative()
    if d.is_zero():
        return chain
    chain.append(_positive_primitive(d))
    while chain[-1].degree > 0:
        _, r = qdivmod(
            [Fraction(c) for c in chain[-2].coeffs],
            [Fraction(c) for c in chain[-1].coeffs],
        )
        if not any(r):
            break
        chain.append(_neg_primitive(r))
    return chain


def _positive_primitive(p: IntPoly) -> IntPoly:
    q = p.primitive()
    # primitive() already makes the leading coefficient positive; keep the
    # original sign instead, since Sturm counting needs it.
    if p.coeffs and p.coeffs[-1] < 0:
        return -q
    return q


def _neg_primitive(fracs) -> IntPoly:
    from math import gcd as igcd

    den = 1
    for c in fracs:
        den = den * c.denominator // igcd(den, c.denominator)
    ints = [int(-c * den) for c in fracs]
    g = 0
    for a in ints:
        g = igcd(g, abs(a))
    return IntPoly(a // g for a in ints)


def _variations(chain, x) -> int:
    signs = [s for s in (sign_at(q, x) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def count_real_roots(p: IntPoly, a, b, chain=None) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b]."""
    a, b = as_fraction(a), as_fraction(b)
    if a > b:
        raise ValueError("empty interval")
    if chain is None:
        chain = sturm_chain(p)
    return _variations(chain, a) - _variations(chain, b)


def root_bound(p: IntPoly) -> Fraction:
    """Cauchy bound: all complex roots have modulus <= 1 + max|a_i| / |a_n|."""
    if p.degree < 1:
        return Fraction(1)
    lead = abs(p.coeffs[-1])
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree else 0
    return 1 + Fraction(m, lead)


def isolate_real_roots(p: IntPoly, lo=None, hi=None) -> list[RatInterval]:
    """Disjoint isolating intervals for the distinct real roots of squarefree p.

    Each returned interval contains exactly one root; endpoints are not
    roots.  Exact point roots found during bisection are returned as point
    intervals.
    """
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    bound = root_bound(p)
    if lo is None:
        lo = _nudge_off_root(p, -bound - 1, down=True)
    else:
        lo = as_fraction(lo)
        if sign_at(p, lo) == 0:
            raise ValueError("search endpoint must not be a root")
    if hi is None:
        hi = _nudge_off_root(p, bound + 1, down=False)
    else:
        hi = as_fraction(hi)
        if sign_at(p, hi) == 0:
            raise ValueError("search endpoint must not be a root")
    out = []
    stack = [(lo, hi, count_real_roots(p, lo, hi, chain))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(RatInterval(a, b))
            continue
        mid = _split_point(p, a, b)
        if mid is None:
            # every candidate split point was a root; isolate them directly
            mid = (a + b) / 2
            out.append(RatInterval.point(mid))
            eps = (b - a) / (4 * (p.degree + 1))
            left_n = count_real_roots(p, a, mid - eps, chain)
            right_n = count_real_roots(p, mid + eps, b, chain)
            if left_n:
                stack.append((a, mid - eps, left_n))
            if right_n:
                stack.append((mid + eps, b, right_n))
            continue
        nl = count_real_roots(p, a, mid, chain)
        if nl:
            stack.append((a, mid, nl))
        if n - nl:
            stack.append((mid, b, n - nl))
    out.sort(key=lambda iv: iv.lo)
    return out


def _split_point(p, a, b):
    """A non-root split point strictly inside (a, b), or None."""
    deg = max(p.degree, 1)
    for k in range(1, deg + 3):
        cand = a + (b - a) * Fraction(k, deg + 3)
        if sign_at(p, cand) != 0:
            return cand
    return None


def _nudge_off_root(p, x, down):
    step = Fraction(1)
    while sign_at(p, x) == 0:
        x = x - step if down else x + step
    return x


def refine_root_interval(p: IntPoly, iv: RatInterval, tol) -> RatInterval:
    """Bisect an isolating interval of a simple root down to width <= tol."""
    tol = as_fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if iv.is_point():
        return iv
    a, b = iv.lo, iv.hi
    sa = sign_at(p, a)
    sb = sign_at(p, b)
    if sa == 0 or sb == 0:
        raise ValueError("isolating interval endpoints must not be roots")
    if sa == sb:
        raise ToleranceNotReached(
            "no sign change on the isolating interval (root not simple?)"
        )
    steps = 0
    while b - a > tol:
        mid = (a + b) / 2
        sm = sign_at(p, mid)
        if sm == 0:
            return RatInterval.point(mid)
        if sm == sa:
            a = mid
        else:
            b = mid
        steps += 1
        if steps > 100000:
            raise ToleranceNotReached("bisection exceeded its step budget")
    return RatInterval(a, b)


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun decomposition: p = lead * prod g_i^i with g_i squarefree, coprime.

    Returned factors are primitive with positive leading coefficient; the
    overall integer unit is dropped (callers track it when needed).
    """
    if p.degree < 1:
        return []
    p = p.primitive()
    d = p.derivative()
    a = poly_gcd(p, d)
    if a.degree == 0:
        return [(p, 1)]
    b = p // a
    c = d // a
    out = []
    i = 1
    while b.degree > 0:
        c_minus_db = c - b.derivative()
        g = poly_gcd(b, c_minus_db)
        if g.degree > 0:
            out.append((g, i))
        b = b // g if g.degree > 0 else b
        if g.degree == 0:
            g = IntPoly.one()
        c = c_minus_db // g
        i += 1
    return out


def radical(p: IntPoly) -> IntPoly:
    """Product of the distinct irreducible factors (the squarefree part)."""
    result = IntPoly.one()
    for g, _ in squarefree_decomposition(p):
        result = result * g
    return result
