"""Integer matrices with prescribed self-reciprocal characteristic polynomial
preserving an integral antisymmetric form, the discrete groups they generate,
and the abstract-commensurability semi-decision.

The canonical realization is diag(identity block, companion(f)) together
with a form assembled from the standard symplectic blocks and a computed
invariant form for the companion part.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import salem
from .errors import InternalInconsistency, NoInvariantForm
from .linalg import (
    block_diag,
    det,
    identity,
    is_antisymmetric,
    mat_eq,
    mat_mul,
    mat_pow,
    mat_vec,
    charpoly,
    companion_matrix,
    nullspace,
    primitive_integer_matrix,
    transpose,
    zeros,
)
from .polycore import IntPoly, poly_gcd


@dataclass(frozen=True)
class SympPair:
    """Integer matrix A with integral antisymmetric J, A^T J A = J."""

    A: tuple
    J: tuple

    def __post_init__(self):
        A = [list(r) for r in self.A]
        J = [list(r) for r in self.J]
        n = len(A)
        if n % 2:
            raise ValueError("symplectic pairs need even dimension")
        for m, name in ((A, "A"), (J, "J")):
            if len(m) != n or any(len(r) != n for r in m):
                raise ValueError(f"{name} is not square of matching size")
            if any(not isinstance(x, int) for r in m for x in r):
                raise TypeError(f"{name} must have integer entries")
        if not is_antisymmetric(J):
            raise ValueError("J is not antisymmetric")
        if det(J) == 0:
            raise ValueError("J is degenerate")
        g = 0
        for r in J:
            for x in r:
                g = __import__("math").gcd(g, abs(x))
        if g != 1:
            raise ValueError("J is not primitive")
        if not mat_eq(mat_mul(mat_mul(transpose(A), J), A), J):
            raise ValueError("A^T J A != J")
        object.__setattr__(self, "A", tuple(tuple(r) for r in A))
        object.__setattr__(self, "J", tuple(tuple(r) for r in J))

    @property
    def n(self) -> int:
        return len(self.A)

    def a_rows(self):
        return [list(r) for r in self.A]

    def j_rows(self):
        return [list(r) for r in self.J]

    def to_json(self):
        return {
            "A": [[str(x) for x in row] for row in self.A],
            "J": [[str(x) for x in row] for row in self.J],
        }

    @classmethod
    def from_json(cls, data) -> "SympPair":
        A = [[int(x) for x in row] for row in data["A"]]
        J = [[int(x) for x in row] for row in data["J"]]
        return cls(tuple(map(tuple, A)), tuple(map(tuple, J)))


def companion(f: IntPoly):
    """Companion matrix with its characteristic polynomial re-verified."""
    m = companion_matrix(f)
    if charpoly(m) != f:
        raise InternalInconsistency(f"companion matrix of {f} failed verification")
    return m


def standard_symplectic(n: int):
    """Block-diagonal [[0,1],[-1,0]] pairs on dimension n (even)."""
    if n % 2:
        raise ValueError("standard symplectic form needs even dimension")
    j = zeros(n, n)
    for i in range(0, n, 2):
        j[i][i + 1] = 1
        j[i + 1][i] = -1
    return j


def invariant_form(A, seed: int = 0, tries: int = 64):
    """A primitive integral antisymmetric nondegenerate J with A^T J A = J.

    Solves the linear system exactly, then picks a nondegenerate element of
    the solution space: seeded rational combinations first, and if those
    fail, a deterministic grid that decides whether the determinant
    vanishes identically on the space.
    """
    n = len(A)
    if any(not isinstance(x, int) for row in A for x in row):
        raise TypeError("invariant_form expects an integer matrix")
    if det(A) == 0:
        raise ValueError("invariant_form expects an invertible matrix")
    unknowns = [(i, j) for i in range(n) for j in range(i + 1, n)]
    index = {u: k for k, u in enumerate(unknowns)}

    def j_entry(i, j, x):
        if i == j:
            return Fraction(0)
        if i < j:
            return x[index[(i, j)]]
        return -x[index[(j, i)]]

    # rows of the linear system (A^T J A - J)_{kl} = 0 for k < l
    rows = []
    for k in range(n):
        for l in range(k + 1, n):
            row = [Fraction(0)] * len(unknowns)
            for (i, j), col in index.items():
                # coefficient of u_{ij}: A[i][k]A[j][l] - A[j][k]A[i][l]
                coeff = A[i][k] * A[j][l] - A[j][k] * A[i][l]
                if (i, j) == (k, l):
                    coeff -= 1
                row[col] = Fraction(coeff)
            rows.append(row)
    basis = nullspace(rows)
    if not basis:
        raise NoInvariantForm("no nonzero antisymmetric form is preserved")

    def assemble(x):
        return [[j_entry(i, j, x) for j in range(n)] for i in range(n)]

    def combine(coeffs):
        return [
            sum(c * v[k] for c, v in zip(coeffs, basis))
            for k in range(len(unknowns))
        ]

    rng = random.Random(seed)
    for _ in range(tries):
        coeffs = [Fraction(rng.randint(-9, 9)) for _ in basis]
        J = assemble(combine(coeffs))
        if det(J) != 0:
            Jint, _ = primitive_integer_matrix(J)
            return _sign_normalized(Jint)
    # deterministic completeness fallback: det is a polynomial of degree n
    # in the combination coefficients, so vanishing on a (n+1)^m grid means
    # vanishing identically
    grid = range(n + 1)
    for coeffs in product(grid, repeat=len(basis)):
        J = assemble(combine([Fraction(c) for c in coeffs]))
        if det(J) != 0:
            Jint, _ = primitive_integer_matrix(J)
            return _sign_normalized(Jint)
    raise NoInvariantForm(
        "every preserved antisymmetric form is degenerate (certified on a grid)"
    )


def _sign_normalized(J):
    for row in J:
        for x in row:
            if x:
                return J if x > 0 else [[-y for y in r] for r in J]
    return J


@dataclass(frozen=True)
class GammaA:
    """The discrete group built on diag(I, A°): a Heisenberg group over the
    integer lattice extended by the matrix action.

    Elements are triples (z, v, n) with z in (1/2)Z, v an integer vector,
    n an integer; the product twists v by powers of A and feeds the
    antisymmetric form into the centre.
    """

    pair: SympPair
    f: IntPoly  # characteristic polynomial of the companion block
    q: int
    qbar: int

    def __post_init__(self):
        salem.require_member(self.f)

    @property
    def n(self) -> int:
        return self.pair.n

    def identity(self):
        return (Fraction(0), (0,) * self.n, 0)

    def omega(self, v, w) -> Fraction:
        J = self.pair.J
        return sum(
            Fraction(v[i]) * J[i][j] * w[j] for i in range(self.n) for j in range(self.n)
        )

    def a_power(self, k: int):
        if not hasattr(self, "_powers"):
            object.__setattr__(self, "_powers", {})
        if k not in self._powers:
            self._powers[k] = mat_pow(self.pair.a_rows(), k)
        return self._powers[k]

    def mul(self, g, h):
        z1, v1, n1 = g
        z2, v2, n2 = h
        tv2 = tuple(mat_vec(self.a_power(n1), list(v2)))
        z = z1 + z2 + Fraction(1, 2) * self.omega(v1, tv2)
        v = tuple(a + b for a, b in zip(v1, tv2))
        return (z, v, n1 + n2)

    def inv(self, g):
        z, v, n = g
        w = tuple(-x for x in mat_vec(self.a_power(-n), list(v)))
        return (-z, w, -n)

    def is_member(self, g) -> bool:
        z, v, n = g
        return (
            Fraction(z).denominator in (1, 2)
            and all(Fraction(x).denominator == 1 for x in v)
            and int(n) == n
        )

    def companion_block(self):
        """(A°, J°) acting on the last 2*qbar + 2 coordinates."""
        m = 2 * self.qbar + 2
        lo = self.n - m
        A = [[self.pair.A[i][j] for j in range(lo, self.n)] for i in range(lo, self.n)]
        J = [[self.pair.J[i][j] for j in range(lo, self.n)] for i in range(lo, self.n)]
        return A, J


def gamma_mul(gamma: GammaA, g, h):
    return gamma.mul(g, h)


def gamma_inv(gamma: GammaA, g):
    return gamma.inv(g)


def build_A_for_theorem1(f: IntPoly, q: int, seed: int = 0) -> GammaA:
    """diag(I_{2(q - qbar)}, companion(f)) with the standard-plus-invariant
    form; the characteristic polynomial is verified to be f * (x-1)^{2(q-qbar)}.
    """
    res = salem.require_member(f)
    qbar = res.k - 1
    if q < qbar:
        raise ValueError(f"q = {q} smaller than the circle-pair count {qbar}")
    C = companion(f)
    Jc = invariant_form(C, seed=seed)
    blocks_a = []
    blocks_j = []
    if q > qbar:
        blocks_a.append(identity(2 * (q - qbar)))
        blocks_j.append(standard_symplectic(2 * (q - qbar)))
    blocks_a.append(C)
    blocks_j.append(Jc)
    A = block_diag(*blocks_a)
    J = block_diag(*blocks_j)
    expected = f * (IntPoly([-1, 1]) ** (2 * (q - qbar)))
    if charpoly(A) != expected:
        raise InternalInconsistency("assembled matrix has the wrong characteristic polynomial")
    pair = SympPair(tuple(map(tuple, A)), tuple(map(tuple, J)))
    gamma = GammaA(pair, f, q, qbar)
    report = verify_LKO(pair)
    if not report.passed:
        raise InternalInconsistency(f"construction failed verification: {report.checks}")
    return gamma


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LKOReport:
    checks: tuple  # tuple[(name, bool, detail)]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_json(self):
        return {name: {"passed": ok, "detail": detail} for name, ok, detail in self.checks}


def _poly_at_matrix(p: IntPoly, m):
    n = len(m)
    acc = zeros(n, n)
    for c in reversed(p.coeffs):
        acc = mat_mul(acc, m)
        for i in range(n):
            acc[i][i] += c
    return acc


def verify_LKO(sp) -> LKOReport:
    """Check the lattice-preservation package: A fixes the integer lattice,
    the form is integral, invariant and nondegenerate, A is semisimple over
    Q, and the characteristic polynomial is integral.

    Accepts a validated SympPair or a raw (A, J) pair of integer matrices,
    so that failing inputs produce a failing report instead of a
    construction error.
    """
    if isinstance(sp, SympPair):
        A, J = sp.a_rows(), sp.j_rows()
    else:
        A, J = ([list(r) for r in m] for m in sp)
    checks = []
    d = det(A)
    checks.append(("lattice_preserved", abs(d) == 1, f"det A = {d}"))
    j_integral = all(isinstance(x, int) for row in J for x in row)
    checks.append(("form_integral", j_integral, "J must have integer entries"))
    checks.append(("form_antisymmetric", is_antisymmetric(J), ""))
    dj = det(J)
    checks.append(("form_nondegenerate", dj != 0, f"det J = {dj}"))
    sympl = mat_eq(mat_mul(mat_mul(transpose(A), J), A), J)
    checks.append(("form_invariant", sympl, "A^T J A = J"))
    try:
        chi = charpoly(A)
        checks.append(("charpoly_integral", True, str(chi)))
        rad = chi // poly_gcd(chi, chi.derivative())
        semisimple = all(
            x == 0 for row in _poly_at_matrix(rad, A) for x in row
        )
        checks.append(
            ("semisimple", semisimple, f"squarefree part {rad} annihilates A")
        )
    except InternalInconsistency as exc:
        checks.append(("charpoly_integral", False, str(exc)))
    return LKOReport(tuple(checks))


# ---------------------------------------------------------------------------
# commensurability
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CommensurabilityResult:
    status: str  # 'proven' | 'disproven' | 'unknown'
    S: tuple | None = None
    m: Fraction | None = None
    n1: int | None = None
    n2: int | None = None
    reason: str | None = None

    def to_json(self):
        out = {"status": self.status, "reason": self.reason}
        if self.S is not None:
            out["S"] = [[str(x) for x in row] for row in self.S]
            out["m"] = str(self.m)
            out["n1"], out["n2"] = self.n1, self.n2
        return out


def _intertwiner_basis(M1, M2):
    """Basis of {S : S M1 = M2 S} as integer matrices."""
    n = len(M1)
    rows = []
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[i * n + k] += M1[k][j]
                row[k * n + j] -= M2[i][k]
            rows.append(row)
    out = []
    for v in nullspace(rows):
        m = [[v[i * n + j] for j in range(n)] for i in range(n)]
        mint, _ = primitive_integer_matrix(m)
        out.append(mint)
    return out


def _similitude_factor(S, J1, J2):
    """m with S^T J2 S = m J1, or None."""
    T = mat_mul(mat_mul(transpose(S), J2), S)
    n = len(J1)
    m = None
    for i in range(n):
        for j in range(n):
            if J1[i][j]:
                m = Fraction(T[i][j], J1[i][j])
                break
        if m is not None:
            break
    if m is None or m == 0:
        return None
    for i in range(n):
        for j in range(n):
            if T[i][j] != m * J1[i][j]:
                return None
    return m


def commensurable(g1: GammaA, g2: GammaA, power_bound: int = 12,
                  search_bound: int = 8, combo_budget: int = 200000) -> CommensurabilityResult:
    """Semi-decision of abstract commensurability of the two groups.

    Disproven on mismatched ambient rank, mismatched eigenvalue-1
    multiplicity, or inequivalent real roots; proven by an explicit rational
    similitude between powers of the companion blocks; otherwise unknown
    (the search is bounded by power_bound and search_bound).
    """
    if g1.q != g2.q:
        return CommensurabilityResult(
            "disproven", reason=f"ambient rank differs: q = {g1.q} vs {g2.q}"
        )
    if g1.qbar != g2.qbar:
        return CommensurabilityResult(
            "disproven",
            reason=(
                "eigenvalue-1 multiplicities differ: "
                f"{2 * (g1.q - g1.qbar)} vs {2 * (g2.q - g2.qbar)}"
            ),
        )
    equiv = salem.salem_equivalent(g1.f, g2.f, k_bound=power_bound)
    if equiv.status == "not-equivalent":
        return CommensurabilityResult(
            "disproven", reason=f"real roots not equivalent: {equiv.reason}"
        )
    A1, J1 = g1.companion_block()
    A2, J2 = g2.companion_block()

    pairs = sorted(
        ((n1, n2) for n1 in range(1, power_bound + 1)
         for n2 in range(1, power_bound + 1)),
        key=lambda t: (max(t), t),
    )
    # fast path: equal powers with the identity similitude
    for n1, n2 in pairs:
        if mat_eq(mat_pow(A1, n1), mat_pow(A2, n2)) and mat_eq(J1, J2):
            S = identity(len(A1))
            return CommensurabilityResult("proven", tuple(map(tuple, S)),
                                          Fraction(1), n1, n2)
    evaluated = 0
    for n1, n2 in pairs:
        M1 = mat_pow(A1, n1)
        M2 = mat_pow(A2, n2)
        basis = _intertwiner_basis(M1, M2)
        if not basis:
            continue
        m_dim = len(basis)
        for h in range(1, search_bound + 1):
            for coeffs in product(range(-h, h + 1), repeat=m_dim):
                if max((abs(c) for c in coeffs), default=0) != h:
                    continue
                evaluated += 1
                if evaluated > combo_budget:
                    return CommensurabilityResult(
                        "unknown",
                        reason=f"similitude search exceeded {combo_budget} combinations",
                    )
                S = [
                    [sum(c * b[i][j] for c, b in zip(coeffs, basis))
                     for j in range(len(A1))]
                    for i in range(len(A1))
                ]
                if det(S) == 0:
                    continue
                m = _similitude_factor(S, J1, J2)
                if m is not None:
                    return CommensurabilityResult(
                        "proven", tuple(map(tuple, S)), m, n1, n2
                    )
    return CommensurabilityResult(
        "unknown",
        reason=f"no similitude found with powers <= {power_bound}, height <= {search_bound}",
    )
