"""Irreducibility over Z for monic polynomials of desk-scale degree.

Certified root-cluster method: a monic integer factor of p is determined by
a conjugation-closed subset of p's roots, and its coefficients are the
elementary symmetric functions of that subset.  Interval arithmetic on the
certified root boxes either excludes every integer candidate for some
coefficient, or pins a unique integer polynomial whose divisibility is then
checked by exact division.  Rational-root and squarefree screening run
first; refinement makes the subset test terminate on squarefree inputs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from ..errors import DegreeBoundExceeded, ToleranceNotReached
from ..intervals import RatInterval
from .poly import IntPoly, poly_gcd
from .realroots import isolate_real_roots, refine_root_interval, sign_at
from .roots import _certified_disks, _refine_disk

DEGREE_BOUND = 16


def _integer_divisors(n: int):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.extend((d, n // d))
        d += 1
    out = sorted(set(out))
    return [x for v in out for x in (v, -v)]


def irreducible_over_Z(p: IntPoly) -> bool:
    """True iff monic p has no monic integer factorization into lower degrees."""
    if not p.is_monic():
        raise ValueError("irreducibility test expects a monic polynomial")
    n = p.degree
    if n > DEGREE_BOUND:
        raise DegreeBoundExceeded(f"degree {n} above the supported bound {DEGREE_BOUND}")
    if n <= 0:
        return False
    if n == 1:
        return True
    if p.coeffs[0] == 0:
        return False  # x divides p
    # rational roots of a monic polynomial are integers dividing p(0)
    for r in _integer_divisors(p.coeffs[0]):
        if sign_at(p, Fraction(r)) == 0:
            return False
    if n <= 3:
        return True  # any factorization would involve a linear factor
    if poly_gcd(p, p.derivative()).degree > 0:
        return False  # repeated factor
    return _subset_product_test(p)


def _coarsen(iv: RatInterval, bits: int) -> RatInterval:
    """Outward dyadic rounding: keeps enclosures valid, denominators small."""
    m = 1 << bits
    import math

    return RatInterval(
        Fraction(math.floor(iv.lo * m), m), Fraction(math.ceil(iv.hi * m), m)
    )


def _subset_product_test(p: IntPoly) -> bool:
    n = p.degree
    real_ivs = isolate_real_roots(p)
    n_pairs = (n - len(real_ivs)) // 2
    disks = _certified_disks(p, n_pairs)
    dp = p.derivative()

    bits = 28
    for _ in range(40):
        tol = Fraction(1, 1 << bits)
        real_ivs = [
            refine_root_interval(p, iv, tol) if iv.width > tol else iv
            for iv in real_ivs
        ]
        reals = [_coarsen(iv, bits + 4) for iv in real_ivs]
        # quadratic factors from conjugate pairs: x^2 - 2 Re(z) x + |z|^2
        pair_lin = []
        pair_const = []
        for d in disks:
            re_iv = _coarsen(d.re_iv, bits + 4)
            im_iv = _coarsen(d.im_iv, bits + 4)
            pair_lin.append(re_iv.scale(-2))
            pair_const.append(re_iv.square() + im_iv.square())

        needs_refinement = False
        for size in range(1, n // 2 + 1):
            for n_real in range(min(size, len(reals)) + 1):
                n_pair2, rem = divmod(size - n_real, 2)
                if rem or n_pair2 > len(disks):
                    continue
                for rsub in combinations(range(len(reals)), n_real):
                    for psub in combinations(range(len(disks)), n_pair2):
                        verdict = _try_subset(
                            p, reals, pair_lin, pair_const, rsub, psub
                        )
                        if verdict == "divides":
                            return False
                        if verdict == "refine":
                            needs_refinement = True
        if not needs_refinement:
            return True
        bits *= 2
        disks = [
            _refine_disk(p, dp, d, Fraction(1, 1 << (bits + 4)))
            if 2 * d.rho > Fraction(1, 1 << (bits + 4))
            else d
            for d in disks
        ]
    raise ToleranceNotReached("subset-product test did not converge")


def _try_subset(p, reals, pair_lin, pair_const, rsub, psub):
    """Outcome for one candidate root subset: 'no', 'refine' or 'divides'."""
    coeffs = [RatInterval.point(1)]
    for i in rsub:
        coeffs = _mul_linear(coeffs, -reals[i])
    for j in psub:
        coeffs = _mul_quadratic(coeffs, pair_lin[j], pair_const[j])
    candidate = []
    for iv in coeffs:
        ints = iv.integers()
        if not ints:
            return "no"
        if len(ints) > 1:
            return "refine"
        candidate.append(ints[0])
    g = IntPoly(reversed(candidate))
    if g.degree >= 1 and g.divides(p):
        return "divides"
    return "no"


def _mul_linear(coeffs, c0):
    """Multiply a coefficient-interval polynomial (highest first) by (x + c0)."""
    out = [coeffs[0]]
    for i in range(1, len(coeffs)):
        out.append(coeffs[i] + coeffs[i - 1] * c0)
    out.append(coeffs[-1] * c0)
    return out


def _mul_quadratic(coeffs, c1, c0):
    """Multiply by (x^2 + c1 x + c0), interval coefficients, highest first."""
    m = len(coeffs)
    out = []
    for k in range(m + 2):
        acc = RatInterval.point(0)
        if k < m:
            acc = acc + coeffs[k]
        if 0 <= k - 1 < m:
            acc = acc + coeffs[k - 1] * c1
        if 0 <= k - 2 < m:
            acc = acc + coeffs[k - 2] * c0
        out.append(acc)
    return out
