"""Exact rational interval arithmetic.

All certified real quantities in this package are carried as closed
intervals with ``Fraction`` endpoints.  Arithmetic is outward-exact: the
result interval always contains the true value, and no floating point is
involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' / decimal strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class RatInterval:
    """Closed interval [lo, hi] with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "RatInterval":
        x = as_fraction(x)
        return cls(x, x)

    # -- queries ---------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = as_fraction(x)
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def is_point(self) -> bool:
        return self.lo == self.hi

    def sign(self):
        """+1 / -1 if the interval certifies a sign, else None."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == 0 == self.hi:
            return 0
        return None

    def intersects(self, other: "RatInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersection(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    def hull(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def integers(self):
        """All integers contained in the interval."""
        import math

        return list(range(math.ceil(self.lo), math.floor(self.hi) + 1))

    # -- arithmetic ------------------------------------------------------

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __add__(self, other):
        other = _coerce(other)
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RatInterval(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.contains_zero():
            raise ZeroDivisionError("interval division by an interval containing 0")
        inv = RatInterval(1 / other.hi, 1 / other.lo)
        return self * inv

    def scale(self, c) -> "RatInterval":
        c = as_fraction(c)
        if c >= 0:
            return RatInterval(self.lo * c, self.hi * c)
        return RatInterval(self.hi * c, self.lo * c)

    def shift(self, c) -> "RatInterval":
        c = as_fraction(c)
        return RatInterval(self.lo + c, self.hi + c)

    def square(self) -> "RatInterval":
        if self.lo >= 0:
            return RatInterval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return RatInterval(self.hi * self.hi, self.lo * self.lo)
        return RatInterval(
            Fraction(0), max(self.lo * self.lo, self.hi * self.hi)
        )

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


def _coerce(x) -> RatInterval:
    if isinstance(x, RatInterval):
        return x
    return RatInterval.point(x)


# -- certified square roots ----------------------------------------------


def sqrt_lower(x: Fraction, bits: int = 64) -> Fraction:
    """A rational lower bound for sqrt(x), x >= 0, within 2**-bits relative slack."""
    x = as_fraction(x)
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    m = 1 << bits
    return Fraction(isqrt(n * d * m * m), d * m)


def sqrt_upper(x: Fraction, bits: int = 64) -> Fraction:
    """A rational upper bound for sqrt(x), x >= 0."""
    x = as_fraction(x)
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    m = 1 << bits
    r = isqrt(n * d * m * m)
    if r * r < n * d * m * m:
        r += 1
    return Fraction(r, d * m)


def sqrt_interval(x: RatInterval, bits: int = 64) -> RatInterval:
    """Certified enclosure of sqrt over a nonnegative interval."""
    if x.lo < 0:
        raise ValueError("sqrt of an interval with negative part")
    return RatInterval(sqrt_lower(x.lo, bits), sqrt_upper(x.hi, bits))


def dyadic_round(x: Fraction, bits: int) -> Fraction:
    """Round x to the nearest multiple of 2**-bits (keeps denominators small)."""
    m = 1 << bits
    return Fraction(round(x * m), m)


def format_decimal(x: Fraction, digits: int = 17, direction: str = "nearest") -> str:
    """Decimal string for a rational, rounded outward when requested.

    direction: 'down' rounds toward -inf, 'up' toward +inf, 'nearest' to
    nearest.  'down'/'up' keep enclosures valid when printing intervals.
    """
    x = as_fraction(x)
    scale = 10**digits
    y = x * scale
    n, d = y.numerator, y.denominator
    q, r = divmod(n, d)  # floor division, also for negatives
    if r == 0:
        i = q
    elif direction == "down":
        i = q
    elif direction == "up":
        i = q + 1
    else:
        i = q + (1 if 2 * r >= d else 0)
    sign = "-" if i < 0 else ""
    i = abs(i)
    whole, frac = divmod(i, scale)
    if frac == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{str(frac).zfill(digits).rstrip('0')}"


def interval_json(x: RatInterval, digits: int = 17) -> list:
    """Outward-rounded decimal endpoint pair, still a true enclosure."""
    return [
        format_decimal(x.lo, digits, "down"),
        format_decimal(x.hi, digits, "up"),
    ]
