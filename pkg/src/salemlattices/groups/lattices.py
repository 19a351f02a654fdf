"""Construction of the explicit lattices and exhaustive closure verification.

The one-dimensional-centre lattice is (1/2)Z x Z^n x Z inside the exact
Heisenberg-by-cyclic model; the two-dimensional-centre lattices are the
half-dual-lattice Heisenberg block extended by the dual torus directions,
and the odd family's sixth-scaled variant.  Closure under products of
generator words is a theorem, so any violation found here is reported as a
fatal implementation bug (and deliberately corrupted generators are the
negative control for the checker itself).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from ..criteria import MuSpecT2, decide_T2
from ..errors import ClosureViolation, NotInLattice
from ..intervals import as_fraction
from ..polycore import IntPoly
from ..sympmat import GammaA, SympPair, build_A_for_theorem1
from .twocentre import D0_UNITS, DQ_UNITS, DqExact, Osc2Exact


@dataclass(frozen=True)
class LatticeModel:
    """A family tag, the exact ambient model, generators and metadata."""

    family: str  # 'osc1' | 'osc2' | 'd'
    group: object
    generators: tuple
    meta: dict

    def with_generator(self, index: int, element) -> "LatticeModel":
        gens = list(self.generators)
        gens[index] = element
        return replace(self, generators=tuple(gens))

    def to_json(self):
        enc = _ENCODERS[self.family]
        return {
            "family": self.family,
            "generators": [enc(g) for g in self.generators],
            **self.meta,
        }


def build_lattice_T1(f: IntPoly, q: int, seed: int = 0) -> LatticeModel:
    """(1/2)Z x Z^n x Z with the verified symplectic pair for f and q.

    Generators: the central half-unit, the lattice basis vectors, and the
    cyclic direction acting by the matrix.
    """
    gamma = build_A_for_theorem1(f, q, seed=seed)
    n = gamma.n
    gens = [(Fraction(1, 2), (0,) * n, 0)]
    for i in range(n):
        gens.append((Fraction(0), tuple(int(i == j) for j in range(n)), 0))
    gens.append((Fraction(0), (0,) * n, 1))
    meta = {
        "q": q,
        "qbar": gamma.qbar,
        "poly": f.to_json(),
        "pair": gamma.pair.to_json(),
        "lattice": "(1/2)Z x Z^n x Z",
    }
    return LatticeModel("osc1", gamma, tuple(gens), meta)


def build_lattice_T2(mu: MuSpecT2) -> LatticeModel:
    """The lattice from the dual-plane containment decision.

    Even family: half the dual lattice times Z^(2q), extended by the two
    torus directions.  Odd family: the sixth-scaled dual block, the scaled
    a-lattice, the scaled s-line and the torus directions; for q = 0 the
    plain-coordinate variant (1/6)Z^2 x (1/2)Z x Z^2.
    """
    decision = decide_T2(mu)
    if decision.status != "exists":
        raise NotInLattice(f"no containing lattice: {decision.reason}")
    q = mu.q
    coords = decision.mu_coords
    if mu.family == "osc2":
        group = Osc2Exact(q, coords)
        gens = []
        for zunit in ((Fraction(1, 2), Fraction(0)), (Fraction(0), Fraction(1, 2))):
            gens.append((zunit, (Fraction(0),) * (2 * q), (0, 0)))
        for i in range(2 * q):
            a = tuple(Fraction(int(i == j)) for j in range(2 * q))
            gens.append(((Fraction(0), Fraction(0)), a, (0, 0)))
        gens.append(((Fraction(0), Fraction(0)), (Fraction(0),) * (2 * q), (1, 0)))
        gens.append(((Fraction(0), Fraction(0)), (Fraction(0),) * (2 * q), (0, 1)))
        meta = {
            "q": q,
            "mu_coords": [list(c) for c in coords],
            "lattice": "(1/2)dual x Z^2q  x| dual-torus Z^2",
        }
        return LatticeModel("osc2", group, tuple(gens), meta)

    units = DQ_UNITS if q > 0 else D0_UNITS
    group = DqExact(q, coords, units)
    zq = Fraction(1, units.z_denominator)
    gens = []
    for zunit in ((zq, Fraction(0)), (Fraction(0), zq)):
        gens.append((zunit, (Fraction(0),) * (2 * q), Fraction(0), (0, 0)))
    for i in range(2 * q):
        a = tuple(Fraction(int(i == j)) for j in range(2 * q))
        gens.append(((Fraction(0), Fraction(0)), a, Fraction(0), (0, 0)))
    gens.append(
        (
            (Fraction(0), Fraction(0)),
            (Fraction(0),) * (2 * q),
            Fraction(1, units.s_denominator),
            (0, 0),
        )
    )
    gens.append(((Fraction(0), Fraction(0)), (Fraction(0),) * (2 * q), Fraction(0), (1, 0)))
    gens.append(((Fraction(0), Fraction(0)), (Fraction(0),) * (2 * q), Fraction(0), (0, 1)))
    meta = {
        "q": q,
        "mu_coords": [list(c) for c in coords],
        "units": {
            "alpha_in_s_units": str(units.alpha_us),
            "s_lattice_denominator": units.s_denominator,
            "z_lattice_denominator": units.z_denominator,
        },
        "lattice": (
            "(1/6)Z^2 x (1/2)Z x Z^2"
            if q == 0
            else "(1/6)lambda^2 dual x lambda Z^2q x sqrt(pi/2) lambda Z x| torus Z^2"
        ),
    }
    return LatticeModel("d", group, tuple(gens), meta)


# -- serialization ------------------------------------------------------------


def _enc_osc1(g):
    z, v, n = g
    return {"z": str(z), "v": [str(x) for x in v], "n": int(n)}


def _enc_osc2(g):
    z, a, t = g
    return {"z": [str(z[0]), str(z[1])], "a": [str(x) for x in a],
            "t": [int(t[0]), int(t[1])]}


def _enc_d(g):
    z, a, s, t = g
    return {"z": [str(z[0]), str(z[1])], "a": [str(x) for x in a],
            "s": str(s), "t": [int(t[0]), int(t[1])]}


_ENCODERS = {"osc1": _enc_osc1, "osc2": _enc_osc2, "d": _enc_d}


def _dec_osc1(d):
    return (as_fraction(d["z"]), tuple(as_fraction(x) for x in d["v"]), int(d["n"]))


def _dec_osc2(d):
    return (
        (as_fraction(d["z"][0]), as_fraction(d["z"][1])),
        tuple(as_fraction(x) for x in d["a"]),
        (int(d["t"][0]), int(d["t"][1])),
    )


def _dec_d(d):
    return (
        (as_fraction(d["z"][0]), as_fraction(d["z"][1])),
        tuple(as_fraction(x) for x in d["a"]),
        as_fraction(d["s"]),
        (int(d["t"][0]), int(d["t"][1])),
    )


def lattice_from_json(data) -> LatticeModel:
    """Rebuild a lattice model from its wire form (for the verify surface)."""
    family = data["family"]
    if family == "osc1":
        pair = SympPair.from_json(data["pair"])
        f = IntPoly.from_json(data["poly"])
        gamma = GammaA(pair, f, data["q"], data["qbar"])
        gens = tuple(_dec_osc1(g) for g in data["generators"])
        meta = {k: data[k] for k in ("q", "qbar", "poly", "pair", "lattice")}
        return LatticeModel("osc1", gamma, gens, meta)
    coords = [tuple(c) for c in data["mu_coords"]]
    q = data["q"]
    if family == "osc2":
        group = Osc2Exact(q, coords)
        gens = tuple(_dec_osc2(g) for g in data["generators"])
    elif family == "d":
        units = DQ_UNITS if q > 0 else D0_UNITS
        group = DqExact(q, coords, units)
        gens = tuple(_dec_d(g) for g in data["generators"])
    else:
        raise ValueError(f"unknown family {family!r}")
    meta = {k: v for k, v in data.items() if k != "generators"}
    meta.pop("family")
    return LatticeModel(family, group, gens, meta)


# -- closure ------------------------------------------------------------------


@dataclass(frozen=True)
class ClosureReport:
    word_length: int
    products_checked: int
    distinct_elements: int
    max_height: int

    def to_json(self):
        return {
            "word_length": self.word_length,
            "products_checked": self.products_checked,
            "distinct_elements": self.distinct_elements,
            "max_height": self.max_height,
            "violations": 0,
        }


def _height(element) -> int:
    worst = 1

    def visit(x):
        nonlocal worst
        if isinstance(x, (tuple, list)):
            for y in x:
                visit(y)
        else:
            fx = Fraction(x)
            worst = max(worst, abs(fx.numerator), fx.denominator)

    visit(element)
    return worst


def closure_check(model: LatticeModel, word_length: int) -> ClosureReport:
    """Multiply out every word in the generators and their inverses up to
    the given length, asserting membership of each product."""
    group = model.group
    gens = list(model.generators)
    steps = gens + [group.inv(g) for g in gens]
    for i, g in enumerate(gens):
        if not group.is_member(g):
            raise ClosureViolation(
                f"generator {i} is outside the membership set", word=(i,), element=g
            )
    frontier = {group.identity(): ()}
    seen = dict(frontier)
    checked = 0
    max_height = 1
    for _ in range(word_length):
        new = {}
        for elem, word in frontier.items():
            for idx, step in enumerate(steps):
                prod = group.mul(elem, step)
                checked += 1
                if not group.is_member(prod):
                    raise ClosureViolation(
                        "product of generators left the lattice",
                        word=word + (idx,),
                        element=prod,
                    )
                max_height = max(max_height, _height(prod))
                if prod not in seen:
                    new[prod] = word + (idx,)
        seen.update(new)
        frontier = new
    return ClosureReport(word_length, checked, len(seen), max_height)
