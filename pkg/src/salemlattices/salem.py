"""Classification of self-reciprocal integer polynomials with one root pair
off the unit circle, the quartic family closed forms, and power equivalence.

The classifier accepts exactly the monic, irreducible, self-reciprocal
polynomials of degree 2k whose 2k-2 unit-circle roots are complemented by a
positive real pair r > 1 > 1/r; for k = 1 the explicit quadratic rule
x^2 - a x + 1, a >= 3 applies instead of root analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .certreal import cert_acos, cert_log
from .errors import InternalInconsistency
from .intervals import RatInterval, as_fraction, sqrt_interval
from .linalg import charpoly, companion_matrix, mat_pow
from .polycore import (
    CertifiedRoot,
    IntPoly,
    count_real_roots,
    irreducible_over_Z,
    isolate_real_roots,
    isolate_roots,
    refine_root_interval,
    roots_of_unity_factor,
    trace_polynomial,
)
from .polycore.realroots import root_bound, sign_at, sturm_chain

DEFAULT_TOL = Fraction(1, 10**12)


@dataclass(frozen=True)
class UnitCirclePair:
    """A conjugate root pair e^{+-i s} with certified trace and angle."""

    trace: RatInterval  # y = 2 cos s, inside (-2, 2)
    angle: RatInterval  # s, inside (0, pi)
    root: CertifiedRoot  # the upper-half-plane member
    root_conj: CertifiedRoot


@dataclass(frozen=True)
class SalemData:
    """Certified root data of an accepted polynomial."""

    poly: IntPoly
    k: int
    r: CertifiedRoot
    r_inv: CertifiedRoot
    unit_pairs: tuple[UnitCirclePair, ...]

    @property
    def degree(self) -> int:
        return 2 * self.k

    def to_json(self):
        from .intervals import interval_json

        return {
            "poly": self.poly.to_json(),
            "k": self.k,
            "r": self.r.to_json(),
            "r_inv": self.r_inv.to_json(),
            "unit_pairs": [
                {
                    "trace": interval_json(p.trace),
                    "angle": interval_json(p.angle),
                    "root": p.root.to_json(),
                }
                for p in self.unit_pairs
            ],
        }


class ClassifyResult:
    """Outcome of the family membership test.

    The certified root data is expensive to build, so it materializes on
    first access of .salem only.
    """

    def __init__(self, accepted, k=None, reason=None, detail=None,
                 poly=None, tol=None):
        self.accepted = accepted
        self.k = k
        self.reason = reason
        self.detail = detail
        self._poly = poly
        self._tol = tol
        self._salem = None

    @property
    def salem(self) -> SalemData | None:
        if not self.accepted:
            return None
        if self._salem is None:
            self._salem = _build_salem_data(self._poly, self.k, self._tol)
        return self._salem

    def __repr__(self):
        if self.accepted:
            return f"ClassifyResult(accepted=True, k={self.k})"
        return f"ClassifyResult(accepted=False, reason={self.reason!r})"


_REJECTIONS = {
    "not-monic": "leading coefficient is not 1",
    "zero": "zero polynomial",
    "degree-odd": "degree is odd",
    "degree-too-small": "degree below 2",
    "not-self-reciprocal": "coefficient list is not palindromic",
    "f2-rule": "quadratic is not of the shape x^2 - a x + 1 with a >= 3",
    "reducible": "polynomial is reducible over Z",
    "wrong-circle-count": "number of unit-circle roots differs from degree - 2",
    "real-roots-negative": "the off-circle real pair is negative",
}


def _reject(reason: str, detail: str = "") -> ClassifyResult:
    return ClassifyResult(False, reason=reason,
                          detail=detail or _REJECTIONS.get(reason, ""))


def fast_member_screen(p: IntPoly) -> bool:
    """Cheap necessary conditions for membership with k >= 2.

    A member's trace polynomial has exactly one root above 2 and all others
    inside (-2, 2), hence D(2) = p(1) < 0 and sign D(-2) = (-1)^k, i.e.
    p(-1) > 0.  Two integer evaluations prune almost all search candidates.
    """
    k = p.degree // 2
    if k == 1:
        return True
    return p(1) < 0 < p(-1)


def classify_F_plus(p: IntPoly, tol=DEFAULT_TOL) -> ClassifyResult:
    """Decide membership of p in the accepted family; exact in every branch."""
    return _classify_cached(p.coeffs, as_fraction(tol))


@lru_cache(maxsize=65536)
def _classify_cached(coeffs: tuple, tol: Fraction) -> ClassifyResult:
    p = IntPoly(coeffs)
    if p.is_zero():
        return _reject("zero")
    if not p.is_monic():
        return _reject("not-monic")
    if p.degree < 2:
        return _reject("degree-too-small")
    if p.degree % 2:
        return _reject("degree-odd")
    if not p.is_self_reciprocal():
        return _reject("not-self-reciprocal")
    k = p.degree // 2

    if k == 1:
        a = -p.coeffs[1]
        if p.coeffs[0] != 1 or a < 3:
            return _reject("f2-rule", f"got {p}")
        return ClassifyResult(True, 1, poly=p, tol=tol)

    if sign_at(p, 1) == 0 or sign_at(p, -1) == 0:
        return _reject("reducible", "x - 1 or x + 1 divides p")

    D = trace_polynomial(p)
    chain = sturm_chain(D)
    bound = root_bound(D) + 1
    c_mid = count_real_roots(D, Fraction(-2), Fraction(2), chain)
    c_pos = count_real_roots(D, Fraction(2), bound, chain)
    c_neg = count_real_roots(D, -bound, Fraction(-2), chain)
    if c_mid != k - 1:
        return _reject(
            "wrong-circle-count", f"{2 * c_mid} unit-circle roots, expected {2 * k - 2}"
        )
    if c_neg > 0 or c_pos != 1:
        return _reject("real-roots-negative",
                       f"trace roots beyond 2: {c_pos}, beyond -2: {c_neg}")
    if not irreducible_over_Z(p):
        return _reject("reducible")
    return ClassifyResult(True, k, poly=p, tol=tol)


def _build_salem_data(p: IntPoly, k: int, tol: Fraction) -> SalemData:
    y_pos, y_mid = _trace_split(p, tol / 4)
    r_iv, rinv_iv = _real_pair_from_trace(trace_polynomial(p), y_pos, tol)
    r = CertifiedRoot(r_iv, RatInterval.point(0), 1, False, True)
    r_inv = CertifiedRoot(rinv_iv, RatInterval.point(0), 1, False, True)
    bits = max(8, (tol.denominator // max(tol.numerator, 1)).bit_length() + 4)
    pairs = []
    for y in sorted(y_mid, key=lambda iv: iv.hi, reverse=True):
        re = y.scale(Fraction(1, 2))
        im2 = 1 - re.square()
        im2 = RatInterval(max(Fraction(0), im2.lo), max(im2.hi, Fraction(0)))
        im = sqrt_interval(im2, bits)
        angle = cert_acos(re, bits)
        root = CertifiedRoot(re, im, 1, True, False)
        pairs.append(UnitCirclePair(y, angle, root, root.conjugate()))
    return SalemData(p, k, r, r_inv, tuple(pairs))


def _trace_split(p: IntPoly, tol: Fraction):
    """(y-interval with y > 2, [y-intervals in (-2,2)]) for accepted p."""
    D = trace_polynomial(p)
    if D.degree == 1:
        # F_2 case: D = y - a exactly
        return RatInterval.point(-D.coeffs[0]), []
    ivs = isolate_real_roots(D)
    mids, pos = [], None
    for iv in ivs:
        iv = refine_root_interval(D, iv, tol)
        while iv.contains(2) or iv.contains(-2):
            iv = refine_root_interval(D, iv, iv.width / 4)
        if iv.lo > 2:
            pos = iv
        elif -2 < iv.lo and iv.hi < 2:
            mids.append(iv)
    if pos is None:
        raise InternalInconsistency("accepted polynomial lost its trace root > 2")
    return pos, mids


def _real_pair_from_trace(D: IntPoly, y: RatInterval, tol: Fraction):
    """Intervals for the roots (y +- sqrt(y^2-4))/2 of x^2 - y x + 1, width <= tol.

    y is an isolating interval of a root of the trace polynomial D with
    y > 2; it is refined together with the sqrt precision until both output
    widths meet the tolerance.
    """
    bits = 64
    y_tol = tol / 4
    for _ in range(60):
        if not y.is_point() and y.width > y_tol:
            y = refine_root_interval(D, y, y_tol)
        disc = y.square() - 4
        disc = RatInterval(max(Fraction(0), disc.lo), disc.hi)
        s = sqrt_interval(disc, bits)
        r = (y + s).scale(Fraction(1, 2))
        rinv = (y - s).scale(Fraction(1, 2))
        if r.width <= tol and rinv.width <= tol:
            return r, rinv
        bits *= 2
        y_tol /= 16
    raise InternalInconsistency("real-pair interval refinement stalled")


# -- refinable certified quantities, keyed by the polynomial -----------------


def require_member(f: IntPoly) -> ClassifyResult:
    res = classify_F_plus(f)
    if not res.accepted:
        raise ValueError(f"{f} rejected: {res.reason} ({res.detail})")
    return res


@lru_cache(maxsize=None)
def r_interval(coeffs: tuple, bits: int) -> RatInterval:
    """The root r > 1 of an accepted polynomial, width <= 2**-bits."""
    f = IntPoly(coeffs)
    require_member(f)
    tol = Fraction(1, 1 << bits)
    y_pos, _ = _trace_split(f, tol / 4)
    r, _ = _real_pair_from_trace(trace_polynomial(f), y_pos, tol)
    return r


@lru_cache(maxsize=None)
def trace_intervals(coeffs: tuple, bits: int) -> tuple:
    """The traces y_j in (-2,2), sorted descending (angles ascending)."""
    f = IntPoly(coeffs)
    require_member(f)
    tol = Fraction(1, 1 << bits)
    _, mids = _trace_split(f, tol)
    return tuple(sorted(mids, key=lambda iv: iv.hi, reverse=True))


@lru_cache(maxsize=None)
def log_r_interval(coeffs: tuple, bits: int) -> RatInterval:
    return cert_log(r_interval(coeffs, bits + 8), bits + 8)


@lru_cache(maxsize=None)
def angle_interval(coeffs: tuple, j: int, bits: int) -> RatInterval:
    """s_j = arccos(y_j / 2) for the j-th unit pair (0-based, angle ascending)."""
    ys = trace_intervals(coeffs, bits + 8)
    return cert_acos(ys[j].scale(Fraction(1, 2)), bits + 8)


# -- the quartic family -------------------------------------------------------


@dataclass(frozen=True)
class F4Params:
    """Quartic family parameters: x^4 - a x^3 + b x^2 - a x + 1."""

    a: int
    b: int

    def __post_init__(self):
        if not f4_condition(self.a, self.b):
            raise ValueError(f"({self.a}, {self.b}) outside the quartic family")

    def poly(self) -> IntPoly:
        return IntPoly([1, -self.a, self.b, -self.a, 1])


def f4_condition(a: int, b: int) -> bool:
    """The inequality characterization: 2a > |b+2|, b != 2, b != +-a + 1."""
    return 2 * a > abs(b + 2) and b != 2 and b != a + 1 and b != -a + 1


def enumerate_F4(a_min: int, a_max: int, b_min: int, b_max: int) -> list[F4Params]:
    """All family parameters in the box, each cross-validated by the classifier."""
    out = []
    for a in range(a_min, a_max + 1):
        for b in range(b_min, b_max + 1):
            if not f4_condition(a, b):
                continue
            params = F4Params(a, b)
            check = classify_F_plus(params.poly())
            if not check.accepted or check.k != 2:
                raise InternalInconsistency(
                    f"enumeration accepted ({a},{b}) but the classifier rejected it: "
                    f"{check.reason}"
                )
            out.append(params)
    return out


@dataclass(frozen=True)
class ClosedFormSalem4:
    t1: RatInterval
    t2: RatInterval
    r: RatInterval
    s: RatInterval


def salem4_closed_form(params: F4Params, tol=Fraction(1, 10**10),
                       crosscheck: bool = True) -> ClosedFormSalem4:
    """Closed forms for the quartic family:

    t1, t2 are the roots of t^2 - a t + (b - 2); r = (t1 + sqrt(t1^2-4))/2
    and s = arccos(t2 / 2).  Optionally cross-checked against the certified
    root isolation of the quartic itself.
    """
    tol = as_fraction(tol)
    a, b = params.a, params.b
    bits = 64
    while True:
        disc = RatInterval.point(Fraction(a * a, 4) - b + 2)
        sq = sqrt_interval(disc, bits)
        t1 = sq.shift(Fraction(a, 2))
        t2 = (-sq).shift(Fraction(a, 2))
        d2 = t1.square() - 4
        d2 = RatInterval(max(Fraction(0), d2.lo), d2.hi)
        r = (t1 + sqrt_interval(d2, bits)).scale(Fraction(1, 2))
        s = cert_acos(t2.scale(Fraction(1, 2)), bits)
        if max(t1.width, t2.width, r.width, s.width) <= tol:
            break
        bits *= 2
    out = ClosedFormSalem4(t1, t2, r, s)
    if crosscheck:
        _crosscheck_closed_form(params, out, tol)
    return out


def _crosscheck_closed_form(params, cf: ClosedFormSalem4, tol):
    roots = isolate_roots(params.poly(), tol)
    real = [rt for rt in roots if rt.is_real]
    circ = [rt for rt in roots if rt.on_unit_circle]
    big = max(real, key=lambda rt: rt.re.lo)
    if not big.re.intersects(cf.r):
        raise InternalInconsistency(
            f"closed-form r does not meet the isolated root for {params}"
        )
    t2_from_roots = circ[0].re.scale(2)
    if not t2_from_roots.intersects(cf.t2):
        raise InternalInconsistency(
            f"closed-form t2 does not meet the isolated circle pair for {params}"
        )


# -- equivalence up to powers --------------------------------------------------


@dataclass(frozen=True)
class EquivalenceResult:
    status: str  # 'equivalent' | 'not-equivalent' | 'unknown'
    k1: int | None = None
    k2: int | None = None
    reason: str | None = None


def power_min_poly(f: IntPoly, k: int) -> IntPoly:
    """Minimal polynomial of r^k, as the non-cyclotomic part of char(C_f^k)."""
    C = companion_matrix(f)
    chi = charpoly(mat_pow(C, k))
    cyc = roots_of_unity_factor(chi)
    if cyc.degree > 0:
        chi = chi // cyc
    return chi


def _squarefree_int_part(n: int) -> int:
    n = abs(n)
    out, d = 1, 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            out *= d
        d += 1
    return out * n


def salem_equivalent(p1: IntPoly, p2: IntPoly, k_bound: int = 12) -> EquivalenceResult:
    """Search for k1, k2 <= k_bound with min-poly(r1^k1) = min-poly(r2^k2).

    Degree is an invariant of the equivalence, so mixed degrees are rejected
    outright; mixed quadratic fields are rejected by their discriminants.
    Otherwise the bounded search answers or reports unknown.
    """
    c1 = require_member(p1)
    c2 = require_member(p2)
    if p1.degree != p2.degree:
        return EquivalenceResult(
            "not-equivalent",
            reason=f"degree mismatch: {p1.degree} vs {p2.degree}",
        )
    if c1.k == 1 and c2.k == 1:
        a1, a2 = -p1.coeffs[1], -p2.coeffs[1]
        d1 = _squarefree_int_part(a1 * a1 - 4)
        d2 = _squarefree_int_part(a2 * a2 - 4)
        if d1 != d2:
            return EquivalenceResult(
                "not-equivalent",
                reason=f"distinct real quadratic fields Q(sqrt {d1}) vs Q(sqrt {d2})",
            )
    pows1 = {k: power_min_poly(p1, k) for k in range(1, k_bound + 1)}
    pows2 = {k: power_min_poly(p2, k) for k in range(1, k_bound + 1)}
    for m in range(1, k_bound + 1):
        pairs = [(m, j) for j in range(1, m + 1)] + [(i, m) for i in range(1, m)]
        for k1, k2 in sorted(pairs):
            if pows1[k1] == pows2[k2]:
                return EquivalenceResult("equivalent", k1=k1, k2=k2)
    return EquivalenceResult("unknown", reason=f"no power match with k <= {k_bound}")
