"""Dense integer univariate polynomials with exact arithmetic.

Coefficients are arbitrary-precision ints stored lowest degree first; the
zero polynomial is the empty coefficient tuple.  Division happens over the
rationals internally and is surfaced over the integers only when the result
is integral.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..errors import NonExactDivision


class IntPoly:
    """Integer-coefficient polynomial in canonical form (no leading zeros)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, c, e):
        return cls((0,) * e + (int(c),))

    @classmethod
    def from_json(cls, strings):
        """Parse the wire format: decimal integer strings, constant term first."""
        return cls(int(s) for s in strings)

    def to_json(self):
        return [str(c) for c in self.coeffs]

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i <= self.degree else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def content(self) -> int:
        c = 0
        for a in self.coeffs:
            c = gcd(c, abs(a))
        return c

    def primitive(self) -> "IntPoly":
        """Divide out the content; sign fixed so the leading coefficient is positive."""
        if self.is_zero():
            return self
        c = self.content()
        if self.coeffs[-1] < 0:
            c = -c
        return IntPoly(a // c for a in self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self):
        return IntPoly(-a for a in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(other * a for a in self.coeffs)
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        """Exact integer divmod; raises NonExactDivision on denominators."""
        other = _as_poly(other)
        q, r = qdivmod([Fraction(c) for c in self.coeffs],
                       [Fraction(c) for c in other.coeffs])
        if any(c.denominator != 1 for c in q) or any(c.denominator != 1 for c in r):
            raise NonExactDivision(
                f"({self}) divmod ({other}) has non-integer coefficients"
            )
        return IntPoly(int(c) for c in q), IntPoly(int(c) for c in r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "IntPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        q, r = qdivmod([Fraction(c) for c in other.coeffs],
                       [Fraction(c) for c in self.coeffs])
        return not r and all(c.denominator == 1 for c in q)

    # -- evaluation and transforms ------------------------------------------

    def __call__(self, x):
        """Evaluate by Horner; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def reciprocal(self) -> "IntPoly":
        """x**deg * p(1/x): the coefficient list reversed."""
        return IntPoly(reversed(self.coeffs))

    def is_self_reciprocal(self) -> bool:
        """True iff the coefficient list is palindromic (p(x) = x^deg p(1/x))."""
        if self.is_zero():
            raise ValueError("self-reciprocity is undefined for the zero polynomial")
        return self.coeffs == tuple(reversed(self.coeffs))

    def shift_scale_2(self):
        """Return p(x/2) * 2**deg, used for half-angle style substitutions."""
        n = self.degree
        return IntPoly(c * (1 << (n - i)) for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if abs(c) == 1 else f"{abs(c)}{xs}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    raise TypeError(f"cannot interpret {x!r} as an integer polynomial")


def poly_arith(p: IntPoly, q: IntPoly, op: str):
    """Dispatch surface for the four basic operations.

    op in {'add', 'sub', 'mul', 'divmod'}; divmod raises NonExactDivision
    when quotient or remainder would need denominators.
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "divmod":
        if q.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        return divmod(p, q)
    raise ValueError(f"unknown operation {op!r}")


# -- rational-coefficient helpers (module internal) -------------------------


def qdivmod(a, b):
    """Divmod of Fraction coefficient lists (lowest degree first)."""
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    while r and r[-1] == 0:
        r.pop()
    q = [Fraction(0)] * max(0, len(r) - len(b) + 1)
    inv_lead = 1 / Fraction(b[-1])
    while len(r) >= len(b):
        f = r[-1] * inv_lead
        k = len(r) - len(b)
        q[k] = f
        for i, bc in enumerate(b):
            r[k + i] -= f * bc
        while r and r[-1] == 0:
            r.pop()
    return q, r


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd over Z (computed over Q, cleared to a primitive IntPoly)."""
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]
    while any(b):
        _, r = qdivmod(a, b)
        a, b = b, r
    if not any(a):
        return IntPoly.zero()
    from math import gcd as igcd

    den = 1
    for c in a:
        den = den * c.denominator // igcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    return IntPoly(ints).primitive()


# -- cyclotomic machinery ----------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, by exact recursive division."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = IntPoly.monomial(1, n) - IntPoly.one()
    for d in range(1, n):
        if n % d == 0:
            p = p // cyclotomic(d)
    return p


def _euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def roots_of_unity_factor(p: IntPoly, degree_bound: int | None = None) -> IntPoly:
    """Maximal monic factor of p all of whose roots are roots of unity.

    Tries every cyclotomic polynomial whose order n can contribute, i.e.
    phi(n) <= deg p; phi(n) >= sqrt(n/2) gives the order bound n <= 2 deg^2.
    Factors are extracted with multiplicity by repeated exact division.
    """
    if not p.is_monic():
        raise ValueError("roots_of_unity_factor expects a monic polynomial")
    d = p.degree
    if d <= 0:
        return IntPoly.one()
    n_max = degree_bound if degree_bound is not None else 2 * d * d
    result = IntPoly.one()
    rest = p
    for n in range(1, n_max + 1):
        if _euler_phi(n) > rest.degree:
            continue
        phi_n = cyclotomic(n)
        while phi_n.degree <= rest.degree and phi_n.divides(rest):
            rest = rest // phi_n
            result = result * phi_n
        if rest.degree == 0:
            break
    return result


# -- trace (x + 1/x) substitution ---------------------------------------------


def trace_polynomial(p: IntPoly) -> IntPoly:
    """For self-reciprocal p of even degree 2k, the monic degree-k polynomial D
    with p(x) = x^k * D(x + 1/x).

    Uses the recursion C_0 = 2, C_1 = y, C_{i+1} = y C_i - C_{i-1} for
    x^i + x^-i.  Roots of D in (-2, 2) correspond exactly to the conjugate
    pairs of p on the unit circle, which makes unit-circle root counting an
    exact real-root question.
    """
    if p.degree % 2 != 0 or not p.is_self_reciprocal():
        raise ValueError("trace polynomial requires a self-reciprocal even-degree input")
    k = p.degree // 2
    c_prev = IntPoly((2,))  # C_0
    c_cur = IntPoly.x()  # C_1
    out = IntPoly((p.coeffs[k],))
    for i in range(1, k + 1):
        out = out + p.coeffs[k + i] * c_cur
        c_prev, c_cur = c_cur, IntPoly.x() * c_cur - c_prev
    return out
