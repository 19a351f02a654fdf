"""The two-dimensional-centre families, exact in normalized units.

After the lattice-containment decision the parameter covectors have integer
coordinates m_k in the found basis, and with the normalized units

    u_z = lambda^2 (sigma basis),  u_a = lambda,  u_s = lambda * sqrt(pi/2),
    l-part in the T basis with sigma_i(T_j) = 2 pi delta_ij,

every structure constant of the group law is rational: alpha(T1, T2) equals
2 u_s, and t-flat lands on (1/2) u_z per unit of s.  The odd family with
q = 0 uses plain coordinates instead (alpha(e1, e2) = 1); both variants are
instances of the same parametrized model.  Exactness requires the l-part in
the integer lattice, where the rotations are trivial; the numeric twins
accept arbitrary real data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import InexactPath, ModelMismatch
from ..intervals import as_fraction


@dataclass(frozen=True)
class UnitSystem:
    """Rational structure constants of the group law in the chosen units."""

    alpha_us: Fraction  # alpha(T1, T2) measured in the s unit
    tflat_per_s: Fraction  # z-units of s * t-flat per unit s and unit tau
    s_denominator: int  # lattice: s in (1/s_denominator) Z
    z_denominator: int  # lattice: each z coordinate in (1/z_denominator) Z


DQ_UNITS = UnitSystem(Fraction(2), Fraction(1, 2), 1, 6)
D0_UNITS = UnitSystem(Fraction(1), Fraction(1), 2, 6)


def _vec2(x):
    a, b = x
    return (as_fraction(a), as_fraction(b))


class Osc2Exact:
    """Even family: elements (z, a, tau), z a pair in the sigma basis,
    a an integer-frame vector of length 2q, tau in Z^2 (rotations trivial)."""

    def __init__(self, q: int, mu_coords):
        self.q = q
        self.mu_coords = tuple((int(x), int(y)) for x, y in mu_coords)
        if len(self.mu_coords) != q:
            raise ValueError("need one coordinate pair per entry")

    def identity(self):
        return ((Fraction(0), Fraction(0)), (Fraction(0),) * (2 * self.q), (0, 0))

    def _check(self, g):
        z, a, tau = g
        if len(a) != 2 * self.q:
            raise ModelMismatch("wrong a-part dimension")
        if any(int(t) != t for t in tau):
            raise InexactPath("the exact model needs an integer l-part")
        return (_vec2(z), tuple(as_fraction(x) for x in a), (int(tau[0]), int(tau[1])))

    def omega(self, a, b):
        """omega(a, b) as a vector in the sigma basis: sum of wedges times mu_k."""
        z1 = Fraction(0)
        z2 = Fraction(0)
        for k, (m1, m2) in enumerate(self.mu_coords):
            w = a[2 * k] * b[2 * k + 1] - a[2 * k + 1] * b[2 * k]
            z1 += w * m1
            z2 += w * m2
        return (z1, z2)

    def mul(self, g, h):
        z1, a1, t1 = self._check(g)
        z2, a2, t2 = self._check(h)
        w = self.omega(a1, a2)
        z = (z1[0] + z2[0] + w[0] / 2, z1[1] + z2[1] + w[1] / 2)
        a = tuple(x + y for x, y in zip(a1, a2))
        return (z, a, (t1[0] + t2[0], t1[1] + t2[1]))

    def inv(self, g):
        z, a, t = self._check(g)
        return ((-z[0], -z[1]), tuple(-x for x in a), (-t[0], -t[1]))

    def is_member(self, g) -> bool:
        z, a, t = self._check(g)
        return (
            all(x.denominator in (1, 2) for x in z)
            and all(x.denominator == 1 for x in a)
        )

    def rotation_is_trivial_on_lattice(self) -> bool:
        """e^(rho(t)) = id for t in the l-lattice: integer coordinates mean
        every angle is an integer multiple of 2 pi."""
        return all(
            isinstance(m1, int) and isinstance(m2, int)
            for m1, m2 in self.mu_coords
        )


class DqExact:
    """Odd family: elements (z, a, s, tau); see the module docstring for the
    unit conventions.  For q = 0 pass the plain-coordinate unit system."""

    def __init__(self, q: int, mu_coords, units: UnitSystem = DQ_UNITS):
        self.q = q
        self.units = units
        self.mu_coords = tuple((int(x), int(y)) for x, y in mu_coords)
        if len(self.mu_coords) != q:
            raise ValueError("need one coordinate pair per entry")

    def identity(self):
        return (
            (Fraction(0), Fraction(0)),
            (Fraction(0),) * (2 * self.q),
            Fraction(0),
            (0, 0),
        )

    def _check(self, g):
        z, a, s, tau = g
        if len(a) != 2 * self.q:
            raise ModelMismatch("wrong a-part dimension")
        if any(int(t) != t for t in tau):
            raise InexactPath("the exact model needs an integer l-part")
        return (
            _vec2(z),
            tuple(as_fraction(x) for x in a),
            as_fraction(s),
            (int(tau[0]), int(tau[1])),
        )

    def omega(self, a, b):
        z1 = Fraction(0)
        z2 = Fraction(0)
        for k, (m1, m2) in enumerate(self.mu_coords):
            w = a[2 * k] * b[2 * k + 1] - a[2 * k + 1] * b[2 * k]
            z1 += w * m1
            z2 += w * m2
        return (z1, z2)

    def tflat(self, tau):
        """t-flat in z-units per unit of s: the wedge with the alpha cocycle."""
        c = self.units.tflat_per_s
        return (-c * tau[1], c * tau[0])

    def alpha(self, t1, t2) -> Fraction:
        """alpha(t1, t2) in s-units."""
        return self.units.alpha_us * (
            as_fraction(t1[0]) * t2[1] - as_fraction(t1[1]) * t2[0]
        )

    def _hh(self, h1, h2):
        z1, a1, s1 = h1
        z2, a2, s2 = h2
        w = self.omega(a1, a2)
        return (
            (z1[0] + z2[0] + w[0] / 2, z1[1] + z2[1] + w[1] / 2),
            tuple(x + y for x, y in zip(a1, a2)),
            s1 + s2,
        )

    def _conj_by_l(self, tau, h):
        # l(t) h(z, a, s) l(t)^-1 = h(z - s * t-flat, a, s); rotation trivial
        z, a, s = h
        tf = self.tflat(tau)
        return ((z[0] - s * tf[0], z[1] - s * tf[1]), a, s)

    def _ll(self, t1, t2):
        # l(t) l(t') = h(-1/3 alpha(t,t') (t + t'/2)-flat, 0, alpha(t,t')/2) l(t+t')
        w = self.alpha(t1, t2)
        mid = (t1[0] + Fraction(t2[0], 2), t1[1] + Fraction(t2[1], 2))
        c = self.units.tflat_per_s
        zf = (-c * mid[1], c * mid[0])
        z = (-w / 3 * zf[0], -w / 3 * zf[1])
        return (z, (Fraction(0),) * (2 * self.q), w / 2)

    def mul(self, g, h):
        z1, a1, s1, t1 = self._check(g)
        z2, a2, s2, t2 = self._check(h)
        h2c = self._conj_by_l(t1, (z2, a2, s2))
        hl = self._ll(t1, t2)
        hz, ha, hs = self._hh((z1, a1, s1), h2c)
        hz, ha, hs = self._hh((hz, ha, hs), hl)
        return (hz, ha, hs, (t1[0] + t2[0], t1[1] + t2[1]))

    def inv(self, g):
        z, a, s, t = self._check(g)
        tf = self.tflat(t)
        return (
            (-z[0] - s * tf[0], -z[1] - s * tf[1]),
            tuple(-x for x in a),
            -s,
            (-t[0], -t[1]),
        )

    def is_member(self, g) -> bool:
        z, a, s, t = self._check(g)
        zd = self.units.z_denominator
        sd = self.units.s_denominator
        return (
            all((x * zd).denominator == 1 for x in z)
            and all(x.denominator == 1 for x in a)
            and (s * sd).denominator == 1
        )


def osc2_mul(model: Osc2Exact, g, h):
    return model.mul(g, h)


def dq_mul(model: DqExact, g, h):
    return model.mul(g, h)


# -- numeric twins -------------------------------------------------------------


class Osc2Numeric:
    """Floating twin of the even family; arbitrary real l-part allowed."""

    def __init__(self, q: int, mu_coords):
        self.q = q
        self.mu = [(float(x), float(y)) for x, y in mu_coords]

    def _rot(self, tau, a):
        out = np.array(a, dtype=float).copy()
        for k, (m1, m2) in enumerate(self.mu):
            theta = 2 * math.pi * (m1 * tau[0] + m2 * tau[1])
            c, s = math.cos(theta), math.sin(theta)
            u, v = out[2 * k], out[2 * k + 1]
            out[2 * k], out[2 * k + 1] = c * u - s * v, s * u + c * v
        return out

    def omega(self, a, b):
        z = np.zeros(2)
        for k, (m1, m2) in enumerate(self.mu):
            w = a[2 * k] * b[2 * k + 1] - a[2 * k + 1] * b[2 * k]
            z += w * np.array([m1, m2])
        return z

    def identity(self):
        return (np.zeros(2), np.zeros(2 * self.q), np.zeros(2))

    def mul(self, g, h):
        z1, a1, t1 = g
        z2, a2, t2 = h
        ra2 = self._rot(t1, a2)
        return (z1 + z2 + 0.5 * self.omega(a1, ra2), a1 + ra2, t1 + t2)

    def inv(self, g):
        z, a, t = g
        return (-z, -self._rot(-t, a), -t)

    def random_element(self, rng):
        return (
            np.array([rng.uniform(-2, 2) for _ in range(2)]),
            np.array([rng.uniform(-2, 2) for _ in range(2 * self.q)]),
            np.array([rng.uniform(-2, 2) for _ in range(2)]),
        )


class DqNumeric:
    """Floating twin of the odd family in the same units as DqExact."""

    def __init__(self, q: int, mu_coords, units: UnitSystem = DQ_UNITS):
        self.q = q
        self.units = units
        self.mu = [(float(x), float(y)) for x, y in mu_coords]

    def _rot(self, tau, a):
        out = np.array(a, dtype=float).copy()
        for k, (m1, m2) in enumerate(self.mu):
            theta = 2 * math.pi * (m1 * tau[0] + m2 * tau[1])
            c, s = math.cos(theta), math.sin(theta)
            u, v = out[2 * k], out[2 * k + 1]
            out[2 * k], out[2 * k + 1] = c * u - s * v, s * u + c * v
        return out

    def omega(self, a, b):
        z = np.zeros(2)
        for k, (m1, m2) in enumerate(self.mu):
            w = a[2 * k] * b[2 * k + 1] - a[2 * k + 1] * b[2 * k]
            z += w * np.array([m1, m2])
        return z

    def tflat(self, tau):
        c = float(self.units.tflat_per_s)
        return np.array([-c * tau[1], c * tau[0]])

    def alpha(self, t1, t2) -> float:
        return float(self.units.alpha_us) * (t1[0] * t2[1] - t1[1] * t2[0])

    def identity(self):
        return (np.zeros(2), np.zeros(2 * self.q), 0.0, np.zeros(2))

    def mul(self, g, h):
        z1, a1, s1, t1 = g
        z2, a2, s2, t2 = h
        # conjugate the second h-part by l(t1)
        z2c = z2 - s2 * self.tflat(t1)
        a2c = self._rot(t1, a2)
        w = self.alpha(t1, t2)
        mid = t1 + 0.5 * np.asarray(t2, dtype=float)
        c = float(self.units.tflat_per_s)
        z_ell = -(w / 3.0) * np.array([-c * mid[1], c * mid[0]])
        z = z1 + z2c + 0.5 * self.omega(a1, a2c) + z_ell
        a = a1 + a2c
        s = s1 + s2 + w / 2.0
        return (z, a, s, t1 + np.asarray(t2, dtype=float))

    def inv(self, g):
        z, a, s, t = g
        return (-z - s * self.tflat(t), -self._rot(-t, a), -s, -np.asarray(t))

    def random_element(self, rng):
        return (
            np.array([rng.uniform(-2, 2) for _ in range(2)]),
            np.array([rng.uniform(-2, 2) for _ in range(2 * self.q)]),
            rng.uniform(-2, 2),
            np.array([rng.uniform(-2, 2) for _ in range(2)]),
        )
