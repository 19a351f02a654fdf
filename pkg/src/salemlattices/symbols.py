"""Symbolic real numbers: exact rational combinations over a declared basis
of real constants, each constant carrying a certified (and, where possible,
refinable) interval value.

Irrational data enters the decision procedures only through such bases.  A
symbol may be flagged as part of a declared Q-linearly-independent family;
formal nonvanishing then certifies actual nonvanishing for linear
expressions, and every verdict that uses the flag records the assumption.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import salem
from .certreal import cert_pi, cert_two_pi
from .errors import IncomparableEntries, UndecidableComparison
from .intervals import RatInterval, as_fraction, sqrt_interval

REFINEMENT_BUDGET_BITS = 256


class Symbol:
    """A named real constant with a certified interval provider."""

    __slots__ = ("name", "independent", "_provider", "_cache")

    def __init__(self, name: str, provider, independent: bool = False):
        self.name = name
        self.independent = independent
        self._provider = provider
        self._cache = {}

    def interval(self, bits: int = 64) -> RatInterval:
        if bits not in self._cache:
            self._cache[bits] = self._provider(bits)
        return self._cache[bits]

    def __eq__(self, other):
        return isinstance(other, Symbol) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"Symbol({self.name!r})"


def unit_symbol() -> Symbol:
    return Symbol("1", lambda bits: RatInterval.point(1), independent=True)


UNIT = unit_symbol()


def static_symbol(name: str, interval: RatInterval, independent: bool = False) -> Symbol:
    return Symbol(name, lambda bits: interval, independent)


def pi_symbol(independent: bool = True) -> Symbol:
    return Symbol("pi", lambda bits: cert_pi(bits), independent)


def sqrt_symbol(n: int, independent: bool = True) -> Symbol:
    if n <= 0:
        raise ValueError("sqrt symbol needs a positive integer")
    return Symbol(
        f"sqrt({n})",
        lambda bits: sqrt_interval(RatInterval.point(n), bits),
        independent,
    )


def _poly_key(coeffs) -> str:
    return ",".join(str(c) for c in coeffs)


def two_pi_over_log_r_symbol(f) -> Symbol:
    """The constant 2*pi / log r for an accepted polynomial f."""
    coeffs = f.coeffs

    def provider(bits):
        return cert_two_pi(bits + 8) / salem.log_r_interval(coeffs, bits + 8)

    return Symbol(f"2pi/log_r[{_poly_key(coeffs)}]", provider, independent=True)


def angle_over_log_r_symbol(f, j: int) -> Symbol:
    """The constant s_j / log r (angles ordered ascending, 0-based)."""
    coeffs = f.coeffs

    def provider(bits):
        return salem.angle_interval(coeffs, j, bits + 8) / salem.log_r_interval(
            coeffs, bits + 8
        )

    return Symbol(f"s{j + 1}/log_r[{_poly_key(coeffs)}]", provider, independent=True)


def t1_symbols(f):
    """(2pi/log r, [s_j/log r ...]) for an accepted polynomial."""
    res = salem.require_member(f)
    qbar = res.k - 1
    return two_pi_over_log_r_symbol(f), [
        angle_over_log_r_symbol(f, j) for j in range(qbar)
    ]


_SQRT_RE = re.compile(r"^sqrt\((\d+)\)$")
_TWO_PI_RE = re.compile(r"^2pi/log_r\[([-\d,]+)\]$")
_ANGLE_RE = re.compile(r"^s(\d+)/log_r\[([-\d,]+)\]$")


def parse_symbol(name: str, interval=None, independent: bool | None = None) -> Symbol:
    """Rebuild a symbol from its wire name; unknown names need an interval."""
    from .polycore import IntPoly

    if name == "1":
        return UNIT
    if name == "pi":
        return pi_symbol(True if independent is None else independent)
    m = _SQRT_RE.match(name)
    if m:
        return sqrt_symbol(int(m.group(1)), True if independent is None else independent)
    m = _TWO_PI_RE.match(name)
    if m:
        f = IntPoly(int(c) for c in m.group(1).split(","))
        return two_pi_over_log_r_symbol(f)
    m = _ANGLE_RE.match(name)
    if m:
        f = IntPoly(int(c) for c in m.group(2).split(","))
        return angle_over_log_r_symbol(f, int(m.group(1)) - 1)
    if interval is None:
        raise ValueError(f"unknown symbol {name!r} without an interval value")
    iv = RatInterval(as_fraction(interval[0]), as_fraction(interval[1]))
    return static_symbol(name, iv, bool(independent))


@dataclass(frozen=True)
class SymbolicReal:
    """Finite rational combination sum(coeff_s * s) over symbols."""

    coeffs: tuple  # tuple of (Symbol, Fraction), sorted by symbol name

    @classmethod
    def from_terms(cls, terms) -> "SymbolicReal":
        acc: dict[Symbol, Fraction] = {}
        for sym, c in terms:
            c = as_fraction(c)
            if c == 0:
                continue
            acc[sym] = acc.get(sym, Fraction(0)) + c
        items = tuple(
            (s, c) for s, c in sorted(acc.items(), key=lambda t: t[0].name) if c != 0
        )
        return cls(items)

    @classmethod
    def rational(cls, q) -> "SymbolicReal":
        return cls.from_terms([(UNIT, as_fraction(q))])

    @classmethod
    def zero(cls) -> "SymbolicReal":
        return cls(())

    def coeff(self, sym: Symbol) -> Fraction:
        for s, c in self.coeffs:
            if s == sym:
                return c
        return Fraction(0)

    @property
    def symbols(self):
        return [s for s, _ in self.coeffs]

    def is_formally_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return all(s == UNIT for s, _ in self.coeffs)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational symbolic value")
        return self.coeff(UNIT)

    def all_independent(self) -> bool:
        return all(s.independent for s, _ in self.coeffs)

    # -- arithmetic (linear operations only) -------------------------------

    def __add__(self, other):
        return SymbolicReal.from_terms(list(self.coeffs) + list(other.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SymbolicReal(tuple((s, -c) for s, c in self.coeffs))

    def scale(self, q) -> "SymbolicReal":
        q = as_fraction(q)
        if q == 0:
            return SymbolicReal.zero()
        return SymbolicReal(tuple((s, c * q) for s, c in self.coeffs))

    def __eq__(self, other):
        return isinstance(other, SymbolicReal) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- certified evaluation ----------------------------------------------

    def eval_interval(self, bits: int = 64) -> RatInterval:
        acc = RatInterval.point(0)
        for s, c in self.coeffs:
            acc = acc + s.interval(bits).scale(c)
        return acc

    def certified_sign(self, budget_bits: int = REFINEMENT_BUDGET_BITS):
        """-1, 0 or +1, or None when the budget is exhausted undecided.

        0 is returned only for the formal zero.  When every symbol in the
        support carries the independence flag, a formally nonzero value is
        known to be nonzero, so refinement must eventually resolve the sign.
        """
        if self.is_formally_zero():
            return 0
        bits = 48
        while bits <= budget_bits:
            sign = self.eval_interval(bits).sign()
            if sign in (1, -1):
                return sign
            bits *= 2
        return None

    def require_sign(self, budget_bits: int = REFINEMENT_BUDGET_BITS) -> int:
        sign = self.certified_sign(budget_bits)
        if sign is None:
            raise UndecidableComparison(
                f"sign of {self} undecided within {budget_bits} bits"
            )
        return sign

    def to_json(self):
        return [{"sym": s.name, "coef": str(c)} for s, c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{s.name}" for s, c in self.coeffs)


def compare_symbolic(a: SymbolicReal, b: SymbolicReal,
                     budget_bits: int = REFINEMENT_BUDGET_BITS) -> int:
    """Certified three-way comparison; raises IncomparableEntries on a stall."""
    diff = a - b
    sign = diff.certified_sign(budget_bits)
    if sign is None:
        raise IncomparableEntries(f"cannot order {a} and {b} within the budget")
    return sign


def symbol_table(entries) -> list[Symbol]:
    """Deterministic list of the symbols appearing in a family of values."""
    seen: dict[str, Symbol] = {}
    for value in entries:
        for s in value.symbols:
            seen.setdefault(s.name, s)
    return [seen[name] for name in sorted(seen)]


def assumption_note(symbols) -> str | None:
    names = sorted(s.name for s in symbols if s != UNIT)
    if not names:
        return None
    return "assumed Q-linearly independent over the rationals: " + ", ".join(names)
