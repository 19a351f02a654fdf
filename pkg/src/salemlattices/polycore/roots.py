"""Certified complex root isolation for integer polynomials.

Strategy, all desk-scale (degree <= 16):

* multiplicities come exactly from a Yun squarefree decomposition;
* real roots of the squarefree part are isolated by Sturm bisection;
* strictly complex roots start from high-precision numeric approximations
  and are then certified in exact rational arithmetic: for monic g of
  degree n, every z has a true root within n*|g(z)/g'(z)| (log-derivative
  bound), and n pairwise disjoint such disks catch every root exactly once;
* unit-circle status is decided exactly through the self-reciprocal gcd
  part and the y = x + 1/x trace substitution, never by floating
  comparison against |z| = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..errors import InternalInconsistency, ToleranceNotReached
from ..intervals import RatInterval, as_fraction, dyadic_round, sqrt_interval, sqrt_upper
from .poly import IntPoly, poly_gcd, trace_polynomial
from .realroots import (
    count_real_roots,
    isolate_real_roots,
    refine_root_interval,
    sign_at,
    squarefree_decomposition,
)

DEFAULT_TOL = Fraction(1, 10**12)


@dataclass(frozen=True)
class CertifiedRoot:
    """One complex root: a certified box, its multiplicity and circle status."""

    re: RatInterval
    im: RatInterval
    multiplicity: int
    on_unit_circle: bool | None = None
    is_real: bool | None = None

    def approx(self) -> complex:
        return complex(self.re.mid, self.im.mid)

    def conjugate(self) -> "CertifiedRoot":
        return CertifiedRoot(self.re, -self.im, self.multiplicity,
                             self.on_unit_circle, self.is_real)

    def abs_squared(self) -> RatInterval:
        return self.re.square() + self.im.square()

    def to_json(self):
        from ..intervals import interval_json

        return {
            "re": interval_json(self.re),
            "im": interval_json(self.im),
            "multiplicity": self.multiplicity,
            "on_unit_circle": self.on_unit_circle,
            "is_real": self.is_real,
        }


# -- exact complex-rational evaluation --------------------------------------


def eval_at_point(p: IntPoly, re: Fraction, im: Fraction):
    """p(re + i*im) by Horner, exact; returns (real, imag) Fractions."""
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def eval_on_box(p: IntPoly, re: RatInterval, im: RatInterval):
    """Interval extension of p over a rectangle; returns (re, im) intervals."""
    ar, ai = RatInterval.point(0), RatInterval.point(0)
    for c in reversed(p.coeffs):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def box_excludes_zero(p: IntPoly, re: RatInterval, im: RatInterval) -> bool:
    ar, ai = eval_on_box(p, re, im)
    return not (ar.contains_zero() and ai.contains_zero())


# -- disk certification for strictly complex roots ---------------------------


@dataclass
class _Disk:
    re: Fraction
    im: Fraction
    rho: Fraction  # certified: a true root lies within rho of the centre

    @property
    def re_iv(self):
        return RatInterval(self.re - self.rho, self.re + self.rho)

    @property
    def im_iv(self):
        return RatInterval(self.im - self.rho, self.im + self.rho)


def _root_distance_bound(g: IntPoly, dg: IntPoly, re: Fraction, im: Fraction,
                         bits: int = 64) -> Fraction | None:
    """Rational upper bound for n*|g(z)/g'(z)| at z = re + i*im; None at g'(z)=0."""
    nr, ni = eval_at_point(g, re, im)
    dr, di = eval_at_point(dg, re, im)
    den = dr * dr + di * di
    if den == 0:
        return None
    ratio = (nr * nr + ni * ni) / den
    return g.degree * sqrt_upper(ratio, bits)


def _newton_step(g: IntPoly, dg: IntPoly, re: Fraction, im: Fraction):
    nr, ni = eval_at_point(g, re, im)
    dr, di = eval_at_point(dg, re, im)
    den = dr * dr + di * di
    if den == 0:
        return None
    # (nr + i ni) / (dr + i di)
    qr = (nr * dr + ni * di) / den
    qi = (ni * dr - nr * di) / den
    return re - qr, im - qi


def _approx_complex_roots(g: IntPoly, prec: int):
    """High-precision numeric roots in the upper half plane (approximations only)."""
    with mpmath.workprec(prec):
        coeffs_high_first = [mpmath.mpf(c) for c in reversed(g.coeffs)]
        roots = mpmath.polyroots(coeffs_high_first, maxsteps=200, extraprec=prec)
        out = []
        for z in roots:
            z = mpmath.mpc(z)
            re = _mpf_fraction(z.real)
            im = _mpf_fraction(z.imag)
            if im > 0:
                out.append((re, im))
    return out


def _mpf_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    man = int(man)
    if man == 0:
        return Fraction(0)
    v = Fraction(man) * Fraction(2) ** exp
    return -v if sign else v


def _certified_disks(g: IntPoly, n_pairs: int) -> list[_Disk]:
    """Certified pairwise-disjoint upper-half-plane disks, one per root pair.

    Together with the real isolating intervals they account for every root
    of the squarefree g, which is what makes the per-disk count exactly one.
    """
    if n_pairs == 0:
        return []
    dg = g.derivative()
    prec = 64
    for _ in range(8):
        cand = _approx_complex_roots(g, prec)
        if len(cand) == n_pairs:
            disks = []
            ok = True
            for re, im in cand:
                re = dyadic_round(re, prec + 8)
                im = dyadic_round(im, prec + 8)
                for _ in range(2):  # polish in exact arithmetic
                    step = _newton_step(g, dg, re, im)
                    if step is None:
                        break
                    re, im = (dyadic_round(v, 2 * prec) for v in step)
                rho = _root_distance_bound(g, dg, re, im)
                if rho is None or im - rho <= 0:
                    ok = False
                    break
                disks.append(_Disk(re, im, rho))
            if ok and _disks_disjoint(disks):
                return disks
        prec *= 2
    raise ToleranceNotReached(
        f"could not certify complex roots of {g} (squarefree input expected)"
    )


def _disks_disjoint(disks) -> bool:
    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            a, b = disks[i], disks[j]
            d2 = (a.re - b.re) ** 2 + (a.im - b.im) ** 2
            if d2 <= (a.rho + b.rho) ** 2:
                return False
    return True


def _refine_disk(g: IntPoly, dg: IntPoly, disk: _Disk, tol: Fraction) -> _Disk:
    re, im, rho = disk.re, disk.im, disk.rho
    for _ in range(80):
        if 2 * rho <= tol:
            return _Disk(re, im, rho)
        step = _newton_step(g, dg, re, im)
        if step is None:
            raise ToleranceNotReached("Newton hit a critical point during refinement")
        # Newton doubles correct bits; keep centres at roughly twice the
        # current accuracy so rounding never dominates the error bound.
        acc_bits = max(0, rho.denominator.bit_length() - rho.numerator.bit_length())
        bits = min(2 * acc_bits + 64, 100000)
        re = dyadic_round(step[0], bits)
        im = dyadic_round(step[1], bits)
        new_rho = _root_distance_bound(g, dg, re, im)
        if new_rho is None:
            raise ToleranceNotReached("Newton hit a critical point during refinement")
        rho = new_rho
    raise ToleranceNotReached("disk refinement exceeded its iteration budget")


# -- unit-circle classification ----------------------------------------------


def _self_reciprocal_part(s: IntPoly) -> IntPoly:
    """gcd(s, reciprocal(s)) for squarefree s with s(0) != 0, s(+-1) != 0.

    Contains every root of s on the unit circle (z on the circle means
    conj(z) = 1/z is also a root), and is itself self-reciprocal.
    """
    d = poly_gcd(s, s.reciprocal())
    if d.degree <= 0:
        return IntPoly.one()
    if not d.is_self_reciprocal():
        # anti-self-reciprocal would force d(1) = 0, excluded by stripping
        raise InternalInconsistency(f"gcd with reciprocal not self-reciprocal: {d}")
    return d


def circle_trace_intervals(d: IntPoly) -> list[RatInterval]:
    """Isolating intervals in (-2, 2) for the trace values of circle root pairs."""
    if d.degree <= 0:
        return []
    D = trace_polynomial(d)
    return [iv for iv in isolate_real_roots(D, Fraction(-2), Fraction(2))]


def unit_circle_root_count(p: IntPoly) -> int:
    """Exact number of roots of p on the unit circle, with multiplicity."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)  # roots at 0 are off the circle
    q = IntPoly(coeffs)
    total = 0
    for g, e in squarefree_decomposition(q):
        count = 0
        for pt in (1, -1):
            if sign_at(g, pt) == 0:
                count += 1
                g = g // IntPoly((-pt, 1))
        if g.degree > 0:
            d = _self_reciprocal_part(g)
            if d.degree > 0:
                D = trace_polynomial(d)
                count += 2 * count_real_roots(D, Fraction(-2), Fraction(2))
        total += e * count
    return total


# -- the main isolation routine -----------------------------------------------


def isolate_roots(p: IntPoly, tol=DEFAULT_TOL) -> list[CertifiedRoot]:
    """Disjoint certified boxes covering all roots of p with multiplicity.

    Unit-circle membership is decided exactly (see module docstring); boxes
    are refined until both coordinates have width <= tol.
    """
    tol = as_fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree == 0:
        return []

    roots: list[CertifiedRoot] = []
    coeffs = list(p.coeffs)
    n_zero = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        n_zero += 1
    if n_zero:
        zero = RatInterval.point(0)
        roots.append(CertifiedRoot(zero, zero, n_zero, False, True))
    q = IntPoly(coeffs)
    if q.degree == 0:
        return roots

    factors = squarefree_decomposition(q)
    rad = IntPoly.one()
    for g, _ in factors:
        rad = rad * g

    # real roots of the radical
    real_ivs = isolate_real_roots(rad)
    # strictly complex roots (upper half plane disks, conjugates implied)
    n_pairs, rem = divmod(rad.degree - len(real_ivs), 2)
    if rem:
        raise InternalInconsistency("real/complex root count parity violated")
    disks = _certified_disks(rad, n_pairs)

    drad = rad.derivative()

    # exact unit-circle accounting on the radical
    has_one = sign_at(rad, 1) == 0
    has_minus_one = sign_at(rad, -1) == 0
    core = rad
    for pt, present in ((1, has_one), (-1, has_minus_one)):
        if present:
            core = core // IntPoly((-pt, 1))
    d_part = _self_reciprocal_part(core) if core.degree > 0 else IntPoly.one()
    y_ivs = circle_trace_intervals(d_part)

    # match trace intervals to complex disks; certify the rest off-circle
    circle_ids = _match_circle_disks(d_part, y_ivs, rad, drad, disks)

    # refine real intervals and classify against the circle
    refined_reals = []
    for iv in real_ivs:
        if has_one and iv.contains(1) and sign_at(rad, 1) == 0 and _iv_holds(rad, iv, 1):
            refined_reals.append((RatInterval.point(1), True))
            continue
        if has_minus_one and iv.contains(-1) and _iv_holds(rad, iv, -1):
            refined_reals.append((RatInterval.point(-1), True))
            continue
        iv = refine_root_interval(rad, iv, tol)
        while iv.contains(1) or iv.contains(-1):
            iv = refine_root_interval(rad, iv, iv.width / 4)
        refined_reals.append((iv, False))

    # multiplicities
    def factor_multiplicity_real(iv):
        for g, e in factors:
            if iv.is_point():
                if sign_at(g, iv.lo) == 0:
                    return e
            elif count_real_roots(g, iv.lo, iv.hi):
                return e
        raise InternalInconsistency("real root matched no squarefree factor")

    def factor_multiplicity_disk(disk):
        if len(factors) == 1:
            return factors[0][1]
        d = disk
        for _ in range(200):
            alive = [
                (g, e)
                for g, e in factors
                if not box_excludes_zero(g, d.re_iv, d.im_iv)
            ]
            if len(alive) == 1:
                return alive[0][1]
            d = _refine_disk(rad, drad, d, d.rho / 4)
        raise ToleranceNotReached("could not attribute a complex root to a factor")

    for iv, on_circle in refined_reals:
        mult = factor_multiplicity_real(iv)
        roots.append(
            CertifiedRoot(iv, RatInterval.point(0), mult, on_circle, True)
        )

    for idx, disk in enumerate(disks):
        mult = factor_multiplicity_disk(disk)
        on_circle = idx in circle_ids
        d = disk
        if not on_circle:
            # refine until the box certifiably avoids the unit circle
            for _ in range(200):
                a2 = d.re_iv.square() + d.im_iv.square()
                if not a2.contains(1):
                    break
                d = _refine_disk(rad, drad, d, d.rho / 4)
            else:
                raise ToleranceNotReached("off-circle certification stalled")
        d = _refine_disk(rad, drad, d, tol)
        upper = CertifiedRoot(d.re_iv, d.im_iv, mult, on_circle, False)
        roots.append(upper)
        roots.append(upper.conjugate())

    if sum(r.multiplicity for r in roots) != p.degree:
        raise InternalInconsistency("root multiplicities do not sum to the degree")
    roots.sort(key=lambda r: (r.re.lo, r.im.lo))
    return roots


def _iv_holds(p, iv, pt):
    """True if iv is the isolating interval of the exact root pt."""
    if iv.is_point():
        return iv.lo == pt
    return count_real_roots(p, iv.lo, iv.hi) == 1 and iv.contains(pt)


def _match_circle_disks(d_part, y_ivs, rad, drad, disks) -> set:
    """Pair every trace interval with exactly one disk; exact and certified.

    Each y in (-2, 2) with D(y) = 0 corresponds to the conjugate pair of
    roots of x^2 - y x + 1; the upper one has re = y/2, im = sqrt(1 - y^2/4).
    Distinct roots separate under refinement, so the intersection pattern
    eventually becomes a perfect matching of candidates into disks.
    """
    if not y_ivs:
        return set()
    D = trace_polynomial(d_part)
    work = list(disks)
    y_work = list(y_ivs)
    for _ in range(200):
        rects = []
        for y in y_work:
            re = y.scale(Fraction(1, 2))
            im2 = 1 - re.square()
            im2 = RatInterval(max(Fraction(0), im2.lo), max(Fraction(0), im2.hi))
            rects.append((re, sqrt_interval(im2)))
        hits = []
        for re, im in rects:
            hit = [
                i
                for i, disk in enumerate(work)
                if disk.re_iv.intersects(re) and disk.im_iv.intersects(im)
            ]
            hits.append(hit)
        flat = [h[0] for h in hits if len(h) == 1]
        if all(len(h) == 1 for h in hits) and len(set(flat)) == len(flat):
            return set(flat)
        y_work = [
            refine_root_interval(D, y, y.width / 4) if not y.is_point() else y
            for y in y_work
        ]
        work = [_refine_disk(rad, drad, d, d.rho / 2) for d in work]
    raise ToleranceNotReached("circle matching did not converge")
