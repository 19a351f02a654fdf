"""Lattice-existence criteria for the three group families.

One-dimensional centre (Theorem-1 side): membership of a parameter vector
mu in the set generated by a classified polynomial f -- mu_j * log r must
hit +-s_j modulo 2*pi*Z for the circle pairs and 2*pi*(Z minus 0) for the
remaining entries -- plus the bounded search over candidate polynomials.

Two-dimensional centre (Theorem-2 side): containment of the entries in a
lattice of the dual plane, decided through the rational rank of the symbol
coefficient matrix and a Hermite-normal-form basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import product

from . import salem
from .certreal import cert_two_pi
from .errors import (
    IncomparableEntries,
    IndecomposabilityViolated,
    UndecidableComparison,
    ZeroEntry,
)
from .intervals import RatInterval, as_fraction
from .linalg import hnf_rows_rational, rank
from .polycore import IntPoly
from .symbols import (
    UNIT,
    SymbolicReal,
    assumption_note,
    compare_symbolic,
    parse_symbol,
    symbol_table,
    t1_symbols,
)

DEFAULT_OFFSET_BOUND = 64
DEFAULT_BUDGET_BITS = 256


# ---------------------------------------------------------------------------
# parameter vectors
# ---------------------------------------------------------------------------


def _validate_nonzero(value: SymbolicReal, what: str):
    if value.is_formally_zero():
        raise ZeroEntry(f"{what} is exactly zero")
    if value.certified_sign() is None and not value.all_independent():
        raise UndecidableComparison(f"{what} could not be certified nonzero")


@dataclass(frozen=True)
class MuSpecT1:
    """Parameter vector for the one-dimensional-centre family."""

    entries: tuple  # tuple[SymbolicReal]

    def __post_init__(self):
        for i, e in enumerate(self.entries):
            _validate_nonzero(e, f"mu[{i}]")

    @property
    def q(self) -> int:
        return len(self.entries)

    def to_json(self):
        syms = symbol_table(self.entries)
        return {
            "symbols": [
                {
                    "name": s.name,
                    "interval": _sym_interval_json(s),
                    "independent": s.independent,
                }
                for s in syms
                if s != UNIT
            ],
            "entries": [e.to_json() for e in self.entries],
        }

    @classmethod
    def from_json(cls, data) -> "MuSpecT1":
        table = _parse_symbol_table(data.get("symbols", []))
        entries = tuple(_parse_entry(e, table) for e in data["entries"])
        return cls(entries)


@dataclass(frozen=True)
class MuSpecT2:
    """Parameter vector in the dual plane for the two-dimensional-centre
    families ('osc2' or 'd')."""

    entries: tuple  # tuple[(SymbolicReal, SymbolicReal)]
    family: str = "osc2"

    def __post_init__(self):
        if self.family not in ("osc2", "d"):
            raise ValueError(f"unknown family {self.family!r}")
        for i, (x, y) in enumerate(self.entries):
            if x.is_formally_zero() and y.is_formally_zero():
                raise ZeroEntry(f"mu[{i}] is exactly zero")

    @property
    def q(self) -> int:
        return len(self.entries)

    def to_json(self):
        flat = [c for e in self.entries for c in e]
        syms = symbol_table(flat)
        return {
            "family": self.family,
            "symbols": [
                {
                    "name": s.name,
                    "interval": _sym_interval_json(s),
                    "independent": s.independent,
                }
                for s in syms
                if s != UNIT
            ],
            "entries": [{"x": x.to_json(), "y": y.to_json()} for x, y in self.entries],
        }

    @classmethod
    def from_json(cls, data) -> "MuSpecT2":
        table = _parse_symbol_table(data.get("symbols", []))
        entries = tuple(
            (_parse_entry(e["x"], table), _parse_entry(e["y"], table))
            for e in data["entries"]
        )
        return cls(entries, data.get("family", "osc2"))


def _sym_interval_json(s):
    from .intervals import interval_json

    return interval_json(s.interval(64))


def _parse_symbol_table(entries):
    table = {}
    for e in entries:
        sym = parse_symbol(e["name"], e.get("interval"), e.get("independent"))
        table[sym.name] = sym
    return table


def _parse_entry(terms, table) -> SymbolicReal:
    out = []
    for t in terms:
        name = t["sym"]
        sym = table.get(name) or parse_symbol(name)
        out.append((sym, as_fraction(t["coef"])))
    return SymbolicReal.from_terms(out)


def rational_mu_t1(values) -> MuSpecT1:
    return MuSpecT1(tuple(SymbolicReal.rational(v) for v in values))


def rational_mu_t2(pairs, family="osc2") -> MuSpecT2:
    return MuSpecT2(
        tuple(
            (SymbolicReal.rational(x), SymbolicReal.rational(y)) for x, y in pairs
        ),
        family,
    )


# ---------------------------------------------------------------------------
# normalization (the S_q x (Z_2)^q actions)
# ---------------------------------------------------------------------------


def normalize_mu_T1(mu: MuSpecT1) -> MuSpecT1:
    """Representative with positive entries sorted ascending; idempotent."""
    flipped = []
    for e in mu.entries:
        sign = e.certified_sign()
        if sign is None:
            raise IncomparableEntries(f"cannot certify the sign of {e}")
        flipped.append(e if sign > 0 else -e)
    ordered = sorted(flipped, key=cmp_to_key(compare_symbolic))
    return MuSpecT1(tuple(ordered))


def _entry_sign_t2(entry) -> int:
    x, y = entry
    sx = x.certified_sign()
    if sx is None:
        raise IncomparableEntries(f"cannot certify the sign of {x}")
    if sx != 0:
        return sx
    sy = y.certified_sign()
    if sy is None:
        raise IncomparableEntries(f"cannot certify the sign of {y}")
    return sy


def _compare_entry_t2(a, b) -> int:
    c = compare_symbolic(a[0], b[0])
    if c:
        return c
    return compare_symbolic(a[1], b[1])


def mu_orbit_normalize_T2(mu: MuSpecT2, lie_algebra_scaling: bool = False) -> MuSpecT2:
    """Canonical orbit representative under per-entry sign flips and sorting.

    With lie_algebra_scaling (the odd-dimensional family compared as Lie
    algebras, not metric ones) the representative is additionally scaled:
    if every coordinate is a rational multiple of the largest one, divide
    through so the largest magnitude is 1; otherwise scale by the positive
    rational that makes the coefficient family primitive integral.
    """
    entries = []
    for e in mu.entries:
        s = _entry_sign_t2(e)
        entries.append(e if s >= 0 else (-e[0], -e[1]))
    entries.sort(key=cmp_to_key(_compare_entry_t2))
    if lie_algebra_scaling and entries:
        entries = _scale_normalize(entries)
    return MuSpecT2(tuple(entries), mu.family)


def _scale_normalize(entries):
    coords = [c for e in entries for c in e if not c.is_formally_zero()]
    abs_coords = []
    for c in coords:
        s = c.certified_sign()
        if s is None:
            raise IncomparableEntries(f"cannot certify the sign of {c}")
        abs_coords.append(c if s > 0 else -c)
    largest = abs_coords[0]
    for c in abs_coords[1:]:
        if compare_symbolic(c, largest) > 0:
            largest = c
    ratios = _rational_ratios(coords, largest)
    if ratios is not None:
        return [
            (SymbolicReal.rational(rx), SymbolicReal.rational(ry))
            for (rx, ry) in _pair_up(ratios, entries)
        ]
    # primitive rational rescale
    nums, dens = [], []
    for e in entries:
        for c in e:
            for _, coef in c.coeffs:
                nums.append(abs(coef.numerator))
                dens.append(coef.denominator)
    from math import gcd

    g = 0
    for n in nums:
        g = gcd(g, n)
    l = 1
    for d in dens:
        l = l * d // gcd(l, d)
    scale = Fraction(l, g) if g else Fraction(1)
    return [(x.scale(scale), y.scale(scale)) for x, y in entries]


def _rational_ratios(coords, largest):
    """coeff-wise test that every coordinate is a rational multiple of largest."""
    ratios = []
    base = dict(largest.coeffs)
    for c in coords:
        cur = dict(c.coeffs)
        if c.is_formally_zero():
            ratios.append(Fraction(0))
            continue
        candidate = None
        for s, coef in cur.items():
            if s not in base:
                return None
            candidate = coef / base[s]
            break
        for s, coef in base.items():
            if cur.get(s, Fraction(0)) != coef * candidate:
                return None
        if set(cur) != set(s for s in base if base[s] * candidate != 0):
            return None
        ratios.append(candidate)
    return ratios


def _pair_up(ratios, entries):
    out = []
    it = iter(ratios)
    for x, y in entries:
        rx = Fraction(0) if x.is_formally_zero() else next(it)
        ry = Fraction(0) if y.is_formally_zero() else next(it)
        out.append((rx, ry))
    return out


def mu_wedge_invariant(mu: MuSpecT2, bits: int = 64):
    """The sign-normalized wedge of the two coordinate columns.

    For entries mu_j = (x_j, y_j) this is the vector of 2x2 minors
    x_i y_j - x_j y_i (i < j), the invariant that separates metric
    isomorphism classes of the odd family beyond the Lie-algebra data.  It
    is exposed as a computed quantity only: the minors are rational when the
    coordinates are, otherwise certified intervals, and the overall sign is
    fixed by making the first nonzero minor positive.  No completeness of
    this normal form is claimed.
    """
    minors = []
    rational = all(
        x.is_rational() and y.is_rational() for x, y in mu.entries
    )
    for i in range(mu.q):
        for j in range(i + 1, mu.q):
            xi, yi = mu.entries[i]
            xj, yj = mu.entries[j]
            if rational:
                minors.append(
                    xi.rational_value() * yj.rational_value()
                    - xj.rational_value() * yi.rational_value()
                )
            else:
                minors.append(_wedge_interval(mu.entries[i], mu.entries[j], bits))
    flip = 1
    for m in minors:
        sign = (m > 0) - (m < 0) if rational else m.sign()
        if sign:
            flip = sign
            break
    if flip < 0:
        minors = [-m for m in minors]
    return tuple(minors)


# ---------------------------------------------------------------------------
# Theorem-1 membership
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SynthesisChoice:
    signs: tuple
    offsets: tuple


def synthesize_mu_T1(f: IntPoly, q: int, signs=None, ks=None) -> MuSpecT1:
    """A member vector built from f: q-bar circle-pair entries
    (+-s_j + 2 pi k_j)/log r and q - q-bar nonzero multiples of 2 pi/log r."""
    res = salem.require_member(f)
    qbar = res.k - 1
    if q < qbar:
        raise ValueError(f"q = {q} below the number of circle pairs {qbar}")
    signs = tuple(signs) if signs is not None else (1,) * qbar
    ks = tuple(ks) if ks is not None else (0,) * qbar + tuple(range(1, q - qbar + 1))
    if len(signs) != qbar:
        raise ValueError(f"need {qbar} signs, got {len(signs)}")
    if len(ks) != q:
        raise ValueError(f"need {q} offsets, got {len(ks)}")
    if any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +-1")
    two_pi_sym, angle_syms = t1_symbols(f)
    entries = []
    for j in range(qbar):
        entries.append(
            SymbolicReal.from_terms(
                [(angle_syms[j], signs[j]), (two_pi_sym, ks[j])]
            )
        )
    for j in range(qbar, q):
        if ks[j] == 0:
            raise ZeroEntry(f"offset k[{j}] = 0 makes mu[{j}] zero")
        entries.append(SymbolicReal.from_terms([(two_pi_sym, ks[j])]))
    return MuSpecT1(tuple(entries))


@dataclass(frozen=True)
class CheckMuResult:
    status: str  # 'member' | 'non-member' | 'unknown'
    witness: tuple | None = None
    assumptions: tuple = ()
    offset_bound: int = DEFAULT_OFFSET_BOUND


def check_mu_T1(mu: MuSpecT1, f: IntPoly,
                k_search_bound: int = DEFAULT_OFFSET_BOUND,
                budget_bits: int = DEFAULT_BUDGET_BITS) -> CheckMuResult:
    """Decide whether some permutation, sign and offset assignment matches mu
    to the root data of f.

    Entries written over f's own symbol basis are decided exactly (modulo
    the recorded independence assumption); purely numeric entries get
    interval-certified answers or 'unknown'.
    """
    res = salem.require_member(f)
    qbar = res.k - 1
    q = mu.q
    if qbar > q:
        return CheckMuResult("non-member", assumptions=(),
                             offset_bound=k_search_bound)
    two_pi_sym, angle_syms = t1_symbols(f)
    assumptions = set()
    feas = []
    for e in mu.entries:
        row, notes = _slot_feasibility(
            e, f, two_pi_sym, angle_syms, qbar, k_search_bound, budget_bits
        )
        assumptions.update(notes)
        feas.append(row)

    witness = _find_assignment(feas, qbar, q, {"yes"})
    if witness is not None:
        return CheckMuResult(
            "member", tuple(witness), tuple(sorted(assumptions)), k_search_bound
        )
    if _find_assignment(feas, qbar, q, {"yes", "unknown"}) is None:
        return CheckMuResult(
            "non-member", None, tuple(sorted(assumptions)), k_search_bound
        )
    return CheckMuResult("unknown", None, tuple(sorted(assumptions)), k_search_bound)


def _slot_feasibility(entry, f, two_pi_sym, angle_syms, qbar, k_bound, budget):
    """Status list [pair_0 .. pair_{qbar-1}, trivial], each a (status, witness).

    Entries over f's own symbol basis are matched formally (exact, one
    recorded assumption); everything else falls back to interval
    certification, which can rule slots out but never confirm them.
    """
    notes = set()
    numeric_cache = {}

    def numeric(slot):
        if slot not in numeric_cache:
            numeric_cache[slot] = _numeric_slot(entry, f, slot, qbar, k_bound, budget)
        return numeric_cache[slot]

    structural = all(
        s == UNIT or s == two_pi_sym or s in angle_syms for s in entry.symbols
    )
    if not structural:
        row = [numeric(j) for j in range(qbar)] + [numeric(None)]
        return row, notes

    note = assumption_note([two_pi_sym, *angle_syms])

    def formal_no(slot):
        # prefer an unconditional interval certificate over the assumption
        status = numeric(slot)
        if status[0] == "no":
            return status
        if note:
            notes.add(note)
        return ("no", None)

    # a structural 'yes' holds by the definition of the symbols; only the
    # structural 'no' rests on the declared independence
    c0 = entry.coeff(UNIT)
    ktw = entry.coeff(two_pi_sym)
    acoefs = [entry.coeff(s) for s in angle_syms]
    statuses = []
    for j in range(qbar):
        ok = (
            c0 == 0
            and ktw.denominator == 1
            and acoefs[j] in (1, -1)
            and all(acoefs[i] == 0 for i in range(qbar) if i != j)
        )
        if ok:
            statuses.append(("yes", ("pair", j, int(acoefs[j]), int(ktw))))
        else:
            statuses.append(formal_no(j))
    trivial_ok = (
        c0 == 0 and all(c == 0 for c in acoefs) and ktw.denominator == 1 and ktw != 0
    )
    if trivial_ok:
        statuses.append(("yes", ("trivial", int(ktw))))
    else:
        statuses.append(formal_no(None))
    return statuses, notes


def _numeric_slot(entry, f, pair_j, qbar, k_bound, budget):
    """Interval feasibility of one slot: ('no', None) or ('unknown', None).

    Trivial slots compare x = mu * log r against nonzero multiples of 2 pi
    directly.  Pair slots use that x lies in +-s_j + 2 pi Z for either sign
    exactly when cos(x) = y_j / 2, which avoids any arccos certification.
    Offsets beyond the search bound leave a slot undecided, never excluded.
    """
    from .certreal import cert_cos

    coeffs = f.coeffs
    bits = 48
    while bits <= budget:
        log_r = salem.log_r_interval(coeffs, bits)
        x = entry.eval_interval(bits) * log_r
        two_pi = cert_two_pi(bits)
        if pair_j is None:
            raw = [k for k in (x / two_pi).integers() if k != 0]
            targets = [two_pi.scale(k) for k in raw if abs(k) <= k_bound]
            capped = len(targets) < len(raw)
            if not capped:
                if not targets:
                    return ("no", None)
                if all(not (x - t).contains_zero() for t in targets):
                    return ("no", None)
        else:
            # largest offset magnitude compatible with the value of x
            k_span = (max(abs(x.lo), abs(x.hi)) + 4) / two_pi.lo
            if k_span > k_bound:
                return ("unknown", None)
            cos_x = cert_cos(x, bits)
            half_trace = salem.trace_intervals(coeffs, bits)[pair_j].scale(
                Fraction(1, 2)
            )
            if not cos_x.intersects(half_trace):
                return ("no", None)
        bits *= 2
    return ("unknown", None)


def _find_assignment(feas, qbar, q, allowed):
    """Backtracking match: pair slots used once each, the rest trivial."""
    n_trivial = q - qbar
    assignment = [None] * q

    def rec(i, used_mask, trivial_used):
        if i == q:
            return True
        row = feas[i]
        for j in range(qbar):
            if used_mask & (1 << j):
                continue
            status, wit = row[j]
            if status in allowed:
                assignment[i] = wit if wit else ("pair", j)
                if rec(i + 1, used_mask | (1 << j), trivial_used):
                    return True
        if trivial_used < n_trivial:
            status, wit = row[qbar]
            if status in allowed:
                assignment[i] = wit if wit else ("trivial",)
                if rec(i + 1, used_mask, trivial_used + 1):
                    return True
        assignment[i] = None
        return False

    if rec(0, 0, 0):
        return list(assignment)
    return None


# ---------------------------------------------------------------------------
# Theorem-1 bounded search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DecideT1Result:
    status: str  # 'exists' | 'no-witness'
    f: IntPoly | None = None
    witness: tuple | None = None
    assumptions: tuple = ()
    candidates_checked: int = 0
    unknown_candidates: int = 0
    bounds: tuple = ()


def candidate_polynomials(coeff_height: int, degree: int):
    """Self-reciprocal monic candidates of the given even degree, ordered by
    (height, lex) so the search is deterministic."""
    k = degree // 2
    if k == 1:
        for a in range(3, coeff_height + 1):
            yield IntPoly([1, -a, 1])
        return
    for h in range(0, coeff_height + 1):
        vecs = [
            v
            for v in product(range(-h, h + 1), repeat=k)
            if max((abs(c) for c in v), default=0) == h
        ]
        for v in sorted(vecs):
            half = list(v)
            coeffs = [1] + half[:-1] + [half[-1]] + list(reversed(half[:-1])) + [1]
            yield IntPoly(coeffs)


def decide_T1(mu: MuSpecT1, coeff_height: int = 10,
              degree_bound: int | None = None,
              k_search_bound: int = DEFAULT_OFFSET_BOUND) -> DecideT1Result:
    """Bounded search for a certifying polynomial; 'no-witness' is a bounded
    search outcome, never a nonexistence proof."""
    q = mu.q
    bounds = (("coeff_height", coeff_height), ("degree_bound", degree_bound),
              ("k_search_bound", k_search_bound))
    if q == 0:
        # the q = 0 group always has a lattice; any quadratic witnesses it
        f = IntPoly([1, -3, 1])
        return DecideT1Result("exists", f, (), (), 0, 0, bounds)
    if degree_bound is None:
        degree_bound = 2 * q + 2
    degree_bound = min(degree_bound, 2 * q + 2)
    checked = unknown = 0
    assumptions = set()
    for degree in range(2, degree_bound + 1, 2):
        for f in candidate_polynomials(coeff_height, degree):
            if not salem.fast_member_screen(f):
                continue
            if not salem.classify_F_plus(f).accepted:
                continue
            checked += 1
            res = check_mu_T1(mu, f, k_search_bound)
            assumptions.update(res.assumptions)
            if res.status == "member":
                return DecideT1Result(
                    "exists", f, res.witness, tuple(sorted(assumptions)),
                    checked, unknown, bounds
                )
            if res.status == "unknown":
                unknown += 1
    return DecideT1Result(
        "no-witness", None, None, tuple(sorted(assumptions)), checked, unknown, bounds
    )


# ---------------------------------------------------------------------------
# indecomposability and the Theorem-2 decision
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndecompResult:
    ok: bool
    reason: str | None = None


def _wedge_formal_zero(e1, e2) -> bool:
    """Exact test whether x1 y2 - x2 y1 is the formal zero quadratic."""
    x1, y1 = e1
    x2, y2 = e2
    acc: dict = {}

    def add(s, t, c):
        key = tuple(sorted((s.name, t.name)))
        acc[key] = acc.get(key, Fraction(0)) + c

    for s, cs in x1.coeffs:
        for t, ct in y2.coeffs:
            add(s, t, cs * ct)
    for s, cs in x2.coeffs:
        for t, ct in y1.coeffs:
            add(s, t, -cs * ct)
    return all(v == 0 for v in acc.values())


def _wedge_interval(e1, e2, bits) -> RatInterval:
    x1, y1 = e1
    x2, y2 = e2
    return x1.eval_interval(bits) * y2.eval_interval(bits) - x2.eval_interval(
        bits
    ) * y1.eval_interval(bits)


def _proportional(e1, e2, budget=DEFAULT_BUDGET_BITS) -> bool:
    if _wedge_formal_zero(e1, e2):
        return True
    bits = 48
    while bits <= budget:
        if not _wedge_interval(e1, e2, bits).contains_zero():
            return False
        bits *= 2
    raise UndecidableComparison(
        "proportionality of two entries involves products of symbols the "
        "declared assumptions do not settle"
    )


def check_indecomposable(mu) -> IndecompResult:
    """Prop-1 preconditions: nonzero entries always; for the even
    two-dimensional-centre family also q >= 3 and at least three distinct
    directions (no pair of lines through 0 covers the entries)."""
    if isinstance(mu, MuSpecT1):
        return IndecompResult(True)
    for i, (x, y) in enumerate(mu.entries):
        if x.is_formally_zero() and y.is_formally_zero():
            return IndecompResult(False, f"mu[{i}] = 0")
    if mu.family == "d":
        return IndecompResult(True)
    if mu.q < 3:
        return IndecompResult(False, f"q = {mu.q} < 3")
    classes: list = []
    for e in mu.entries:
        for rep in classes:
            if _proportional(e, rep):
                break
        else:
            classes.append(e)
        if len(classes) >= 3:
            return IndecompResult(True)
    return IndecompResult(
        False, f"entries span only {len(classes)} directions (two lines cover them)"
    )


@dataclass(frozen=True)
class DecideT2Result:
    status: str  # 'exists' | 'no'
    basis: tuple | None = None  # up to two (SymbolicReal, SymbolicReal) pairs
    mu_coords: tuple | None = None  # integer coordinates of each entry
    assumptions: tuple = ()
    reason: str | None = None


def decide_T2(mu: MuSpecT2, budget_bits: int = DEFAULT_BUDGET_BITS) -> DecideT2Result:
    """Lattice containment of the entries in the dual plane.

    Yes iff the rational rank of the flattened coefficient matrix is at
    most 2 and matches the real dimension of the span; the returned basis
    (from the Hermite normal form of the row span) then contains every
    entry with integer coordinates.
    """
    indec = check_indecomposable(mu)
    if not indec.ok:
        raise IndecomposabilityViolated(indec.reason)
    std = (SymbolicReal.rational(1), SymbolicReal.rational(0)), (
        SymbolicReal.rational(0),
        SymbolicReal.rational(1),
    )
    if mu.q == 0:
        return DecideT2Result("exists", std, (), ())

    flat = [c for e in mu.entries for c in e]
    syms = symbol_table(flat)
    note = assumption_note(syms)
    assumptions = (note,) if note else ()
    matrix = [
        [x.coeff(s) for s in syms] + [y.coeff(s) for s in syms]
        for x, y in mu.entries
    ]
    d = rank(matrix)
    if d > 2:
        return DecideT2Result(
            "no", None, None, assumptions,
            f"rational rank {d} > 2: the entries generate a non-discrete group",
        )
    basis_rows = hnf_rows_rational(matrix)
    betas = [_row_to_pair(row, syms) for row in basis_rows]
    if d == 2:
        if _wedge_formal_zero(betas[0], betas[1]):
            return DecideT2Result(
                "no", None, None, assumptions,
                "rational rank 2 but the real span is a line (dense image)",
            )
        bits = 48
        while bits <= budget_bits:
            if not _wedge_interval(betas[0], betas[1], bits).contains_zero():
                break
            bits *= 2
        else:
            raise UndecidableComparison(
                "real independence of the basis involves products of symbols"
            )
    else:  # d == 1
        x, y = betas[0]
        sx = x.certified_sign()
        if sx not in (0, None) or (sx is None and x.all_independent()):
            completion = (SymbolicReal.rational(0), SymbolicReal.rational(1))
        elif sx == 0:
            completion = (SymbolicReal.rational(1), SymbolicReal.rational(0))
        else:
            raise UndecidableComparison(
                "cannot certify a completion direction for the rank-1 basis"
            )
        betas.append(completion)
    coords = tuple(_integer_coords(e, betas, syms) for e in mu.entries)
    return DecideT2Result("exists", tuple(betas), coords, assumptions)


def _row_to_pair(row, syms):
    n = len(syms)
    x = SymbolicReal.from_terms(zip(syms, row[:n]))
    y = SymbolicReal.from_terms(zip(syms, row[n:]))
    return (x, y)


def _integer_coords(entry, betas, syms):
    """Exact coordinates of an entry in the basis; must come out integral."""
    cols = []
    for bx, by in betas:
        cols.append([bx.coeff(s) for s in syms] + [by.coeff(s) for s in syms])
    target = [entry[0].coeff(s) for s in syms] + [entry[1].coeff(s) for s in syms]
    matrix = [[cols[j][i] for j in range(len(cols))] for i in range(len(target))]
    from .linalg import solve

    sol = solve(matrix, target)
    if sol is None:
        raise UndecidableComparison("entry not in the span of the returned basis")
    out = []
    for v in sol:
        if v.denominator != 1:
            from .errors import InternalInconsistency

            raise InternalInconsistency(
                "HNF basis does not contain an entry with integer coordinates"
            )
        out.append(int(v))
    return tuple(out)
