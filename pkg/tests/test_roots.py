import random
from fractions import Fraction
from math import isqrt

from salemlattices.intervals import RatInterval
from salemlattices.polycore import IntPoly, isolate_roots, unit_circle_root_count


def _sqrt_bracket(x: Fraction, digits=25):
    scale = 10**digits
    n = x.numerator * scale * scale // x.denominator
    lo = Fraction(isqrt(n), scale)
    return lo, lo + Fraction(1, scale)


def test_quadratic_golden_values():
    # oracle: (3 +- sqrt 5) / 2 via integer square roots
    s5 = _sqrt_bracket(Fraction(5))
    expected_hi = ((3 + s5[0]) / 2, (3 + s5[1]) / 2)
    expected_lo = ((3 - s5[1]) / 2, (3 - s5[0]) / 2)
    roots = isolate_roots(IntPoly([1, -3, 1]), Fraction(1, 10**12))
    assert len(roots) == 2
    for r in roots:
        assert r.is_real and not r.on_unit_circle
        assert r.re.width <= Fraction(1, 10**12)
    lo, hi = roots
    assert lo.re.intersects(RatInterval(*expected_lo))
    assert hi.re.intersects(RatInterval(*expected_hi))


def test_gaussian_units_on_circle():
    roots = isolate_roots(IntPoly([1, 0, 1]))
    assert len(roots) == 2
    assert all(r.on_unit_circle for r in roots)
    assert sorted(round(r.approx().imag) for r in roots) == [-1, 1]


def test_quartic_two_real_two_circle():
    # via y = x + 1/x the quartic reduces to y^2 - 3y + 1
    roots = isolate_roots(IntPoly([1, -3, 3, -3, 1]))
    real = [r for r in roots if r.is_real]
    circle = [r for r in roots if r.on_unit_circle]
    assert len(real) == 2 and len(circle) == 2
    assert all(r.re.lo > 0 for r in real)
    assert not any(r.is_real for r in circle)
    # circle pair re-coordinate equals half the trace root (3 - sqrt 5)/2
    s5 = _sqrt_bracket(Fraction(5))
    t2_half = RatInterval((3 - s5[1]) / 4, (3 - s5[0]) / 4)
    assert all(r.re.intersects(t2_half) for r in circle)


def test_multiplicities_and_exact_points():
    p = IntPoly([-1, 1]) ** 2 * IntPoly([1, -3, 1])
    roots = isolate_roots(p)
    assert sum(r.multiplicity for r in roots) == 4
    double = [r for r in roots if r.multiplicity == 2]
    assert len(double) == 1
    assert double[0].on_unit_circle and double[0].re.contains(1)


def test_root_at_zero():
    p = IntPoly([0, 0, 1, 1])  # x^2 (x + 1)
    roots = isolate_roots(p)
    zero = [r for r in roots if r.re.contains(0) and r.im.contains(0)]
    assert zero[0].multiplicity == 2
    assert not zero[0].on_unit_circle


def test_reconstruction_random_sample():
    # certified factor reconstruction: expanding the boxed linear factors
    # gives coefficient intervals that contain the true coefficients
    rng = random.Random(5)
    done = 0
    while done < 20:
        deg = rng.randint(2, 8)
        p = IntPoly([rng.randint(-5, 5) for _ in range(deg)] + [1])
        if p.degree < 2:
            continue
        done += 1
        roots = isolate_roots(p, Fraction(1, 10**9))
        assert sum(r.multiplicity for r in roots) == p.degree

        zero = (RatInterval.point(0), RatInterval.point(0))

        def mul_linear(acc, re, im):
            # multiply (coefficients lowest first) by (x - (re + i im))
            out = []
            for k in range(len(acc) + 1):
                pr, pi = acc[k - 1] if k >= 1 else zero
                cr, ci = acc[k] if k < len(acc) else zero
                out.append(
                    (pr - (cr * re - ci * im), pi - (cr * im + ci * re))
                )
            return out

        acc = [(RatInterval.point(1), RatInterval.point(0))]
        for r in roots:
            for _ in range(r.multiplicity):
                acc = mul_linear(acc, r.re, r.im)
        assert len(acc) == p.degree + 1
        for k, (cr, ci) in enumerate(acc):
            assert cr.contains(p.coeffs[k])
            assert ci.contains(0)


def test_residual_at_midpoints():
    p = IntPoly([1, -3, 3, -3, 1])
    tol = Fraction(1, 10**10)
    for r in isolate_roots(p, tol):
        val = complex(p(complex(r.re.mid, r.im.mid)))
        # |p(mid)| <= (diameter) * (2 * root bound)^(deg - 1)
        assert abs(val) <= float(2 * tol) * (2 * 4) ** 3


def test_mixed_root_types():
    # (x-1)^2 (x+1) (x^2+1) (x^2-3x+1): repeated circle point, a simple
    # circle point, a complex circle pair and an off-circle real pair
    p = (IntPoly([-1, 1]) ** 2 * IntPoly([1, 1]) * IntPoly([1, 0, 1])
         * IntPoly([1, -3, 1]))
    roots = isolate_roots(p)
    assert sum(r.multiplicity for r in roots) == 7
    by_kind = {}
    for r in roots:
        if r.is_real and r.re.contains(1) and r.multiplicity == 2:
            by_kind["one"] = r
        elif r.is_real and r.re.contains(-1):
            by_kind["minus_one"] = r
        elif not r.is_real:
            by_kind.setdefault("complex", []).append(r)
    assert by_kind["one"].on_unit_circle
    assert by_kind["minus_one"].on_unit_circle
    assert len(by_kind["complex"]) == 2
    assert all(r.on_unit_circle for r in by_kind["complex"])
    off = [r for r in roots if r.is_real and not r.on_unit_circle]
    assert len(off) == 2


def test_unit_circle_count_examples():
    assert unit_circle_root_count(IntPoly([1, 0, 1])) == 2
    assert unit_circle_root_count(IntPoly([1, -3, 1])) == 0
    assert unit_circle_root_count(IntPoly([1, 0, -1, -1, -1, 0, 1])) == 4
    assert unit_circle_root_count(IntPoly([1, 1, 1]) * IntPoly([1, -3, 1])) == 2
    assert unit_circle_root_count(IntPoly([-1, 1]) ** 3) == 3
