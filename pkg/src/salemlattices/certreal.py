"""Certified enclosures of transcendental values via mpmath interval arithmetic.

mpmath's ``iv`` context performs outward-rounded interval arithmetic, so the
intervals coming back are true enclosures.  Endpoints of ``iv`` numbers are
dyadic, hence convert to ``Fraction`` exactly.  The only function missing
from the context, arccos, is recovered by certified bisection on ``iv.cos``.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .intervals import RatInterval


def _raw_to_fraction(t) -> Fraction:
    # t is a raw libmp tuple (sign, mantissa, exponent, bitcount)
    sign, man, exp, _ = t
    man = int(man)
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise ValueError("non-finite interval endpoint")
    value = Fraction(man) * Fraction(2) ** exp
    return -value if sign else value


def iv_to_interval(x) -> RatInterval:
    a, b = x._mpi_
    return RatInterval(_raw_to_fraction(a), _raw_to_fraction(b))


def _to_iv(x: RatInterval, ctx):
    # Quotients of exact integers; iv division rounds outward.
    lo = ctx.mpf(x.lo.numerator) / ctx.mpf(x.lo.denominator)
    hi = ctx.mpf(x.hi.numerator) / ctx.mpf(x.hi.denominator)
    return ctx.mpf([lo.a, hi.b])


def _with_prec(bits: int):
    ctx = mpmath.iv
    ctx.prec = bits + 16
    return ctx


def cert_pi(bits: int = 64) -> RatInterval:
    ctx = _with_prec(bits)
    return iv_to_interval(+ctx.pi)


def cert_two_pi(bits: int = 64) -> RatInterval:
    ctx = _with_prec(bits)
    return iv_to_interval(2 * ctx.pi)


def cert_log(x: RatInterval, bits: int = 64) -> RatInterval:
    """Certified enclosure of log over a positive interval."""
    if x.lo <= 0:
        raise ValueError("log requires a strictly positive interval")
    ctx = _with_prec(bits)
    return iv_to_interval(ctx.log(_to_iv(x, ctx)))

def cert_exp(x: RatInterval, bits: int = 64) -> RatInterval:
    ctx = _with_prec(bits)
    return iv_to_interval(ctx.exp(_to_iv(x, ctx)))


def cert_cos(x: RatInterval, bits: int = 64) -> RatInterval:
    ctx = _with_prec(bits)
    return iv_to_interval(ctx.cos(_to_iv(x, ctx)))


def cert_acos(c: RatInterval, bits: int = 48) -> RatInterval:
    """Certified enclosure of arccos over an interval inside [-1, 1].

    Bisection against certified cos: cos is strictly decreasing on [0, pi],
    so any bracket [lo, hi] with cos(lo) >= c and cos(hi) <= c encloses
    arccos(c).  The loop stops once 2**-bits resolution is reached or the
    input interval's own width dominates; either way the enclosure is valid.
    """
    if c.lo < -1 or c.hi > 1:
        raise ValueError("acos requires an interval inside [-1, 1]")
    ctx = _with_prec(bits + 16)
    pi_hi = cert_pi(bits + 16).hi
    lo, hi = Fraction(0), pi_hi
    target = Fraction(1, 1 << bits)
    for _ in range(bits + 8):
        if hi - lo <= target:
            break
        mid = (lo + hi) / 2
        cm = cert_cos(RatInterval.point(mid), bits + 16)
        if cm.lo > c.hi:
            lo = mid  # cos(mid) certified above c: arccos lies right of mid
        elif cm.hi < c.lo:
            hi = mid
        else:
            break  # mid indistinguishable from arccos(c) at this width
    return RatInterval(lo, hi)
