"""Exact linear algebra over Q and Z: the shared substrate for the matrix
constructions (determinants, kernels, characteristic polynomials, Hermite
normal form, companion matrices).

Matrices are plain lists of lists; entries are ints or Fractions.  Nothing
here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import InternalInconsistency
from .polycore import IntPoly

Matrix = list  # list[list[int | Fraction]]


def mat_dim(m: Matrix):
    return len(m), len(m[0]) if m else 0


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def mat_copy(m: Matrix) -> Matrix:
    return [row[:] for row in m]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[x * c for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner = len(a), len(b)
    cols = len(b[0])
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: list) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_antisymmetric(m: Matrix) -> bool:
    n = len(m)
    return all(m[i][j] == -m[j][i] for i in range(n) for j in range(n))


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n, n)
    offset = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[offset + i][offset + j] = b[i][j]
        offset += k
    return out


def det(m: Matrix) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination (exact)."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] / p
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return sign * result


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def mat_pow(m: Matrix, e: int) -> Matrix:
    if e < 0:
        return mat_pow(inverse(m), -e)
    n = len(m)
    result = identity(n)
    base = mat_copy(m)
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        e >>= 1
    return result


def rref(m: Matrix):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = mat_dim(a)
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix) -> list[list[Fraction]]:
    """Basis of the right kernel (one vector per free column)."""
    a, pivots = rref(m)
    rows, cols = mat_dim(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(v)
    return basis


def solve(m: Matrix, rhs: list):
    """One solution of m x = rhs over Q, or None if inconsistent."""
    rows, cols = mat_dim(m)
    aug = [list(map(Fraction, row)) + [Fraction(rhs[i])] for i, row in enumerate(m)]
    a, pivots = rref(aug)
    for r in range(len(pivots), rows):
        if a[r][cols] != 0:
            return None
    if pivots and pivots[-1] == cols:
        return None
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        x[pc] = a[r][cols]
    return x


def charpoly(m: Matrix) -> IntPoly:
    """Characteristic polynomial det(xI - m) by Faddeev-LeVerrier.

    Exact over Q; integer matrices yield integer coefficients (checked).
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(1)]  # x^n downward
    mk = None
    for k in range(1, n + 1):
        if mk is None:
            mk = a
        else:
            shifted = [[mk[i][j] + (coeffs[-1] if i == j else 0) for j in range(n)]
                       for i in range(n)]
            mk = mat_mul(a, shifted)
        ck = -sum(mk[i][i] for i in range(n)) / k
        coeffs.append(ck)
    ints = []
    for c in coeffs:
        if c.denominator != 1:
            raise InternalInconsistency("characteristic polynomial not integral")
        ints.append(int(c))
    return IntPoly(reversed(ints))


def companion_matrix(f: IntPoly) -> Matrix:
    """Companion matrix (subdiagonal ones, last column -coefficients)."""
    if not f.is_monic():
        raise ValueError("companion matrix requires a monic polynomial")
    n = f.degree
    if n < 1:
        raise ValueError("companion matrix requires degree >= 1")
    m = zeros(n, n)
    for i in range(1, n):
        m[i][i - 1] = 1
    for i in range(n):
        m[i][n - 1] = -f.coeffs[i]
    return m


# -- integer lattices ---------------------------------------------------------


def hnf_rows(m: Matrix) -> Matrix:
    """Row-style Hermite normal form of an integer matrix.

    The returned rows are a canonical basis of the integer row span:
    echelon shape, positive pivots, entries above a pivot reduced into
    [0, pivot).  Zero rows are dropped.
    """
    a = [[int(x) for x in row] for row in m]
    if any(x != y for row, irow in zip(m, a) for x, y in zip(row, irow)):
        raise ValueError("hnf_rows expects integer entries")
    rows = [row[:] for row in a if any(row)]
    if not rows:
        return []
    cols = len(rows[0])
    basis: list[list[int]] = []
    r = 0
    for c in range(cols):
        idx = [i for i in range(r, len(rows)) if rows[i][c]]
        if not idx:
            continue
        while len(idx) > 1:
            idx.sort(key=lambda i: abs(rows[i][c]))
            i0 = idx[0]
            for i in idx[1:]:
                q = rows[i][c] // rows[i0][c]
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[i0])]
            idx = [i for i in idx if rows[i][c]]
        i0 = idx[0]
        rows[r], rows[i0] = rows[i0], rows[r]
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
        r += 1
    rows = [row for row in rows if any(row)]
    # reduce entries above each pivot; ascending pivot order keeps the
    # already-reduced columns intact (echelon rows have leading zeros)
    pivots = []
    for row in rows:
        pc = next(i for i, x in enumerate(row) if x)
        pivots.append(pc)
    for i in range(1, len(rows)):
        pc = pivots[i]
        p = rows[i][pc]
        for j in range(i):
            q = rows[j][pc] // p
            if q:
                rows[j] = [x - q * y for x, y in zip(rows[j], rows[i])]
    return rows


def hnf_rows_rational(m: Matrix):
    """HNF basis for the Z-row-span of a rational matrix.

    Scales by the lcm of denominators, runs the integer HNF, scales back;
    returns rows of Fractions.
    """
    den = 1
    for row in m:
        for x in row:
            d = Fraction(x).denominator
            den = den * d // gcd(den, d)
    scaled = [[int(Fraction(x) * den) for x in row] for row in m]
    basis = hnf_rows(scaled)
    return [[Fraction(x, den) for x in row] for row in basis]


def primitive_integer_matrix(m: Matrix):
    """Scale a rational matrix to a primitive integer matrix (gcd 1).

    Returns (matrix, scale) with matrix = scale * m and scale > 0 rational.
    """
    den = 1
    for row in m:
        for x in row:
            d = Fraction(x).denominator
            den = den * d // gcd(den, d)
    ints = [[int(Fraction(x) * den) for x in row] for row in m]
    g = 0
    for row in ints:
        for x in row:
            g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero matrix has no primitive scaling")
    ints = [[x // g for x in row] for row in ints]
    return ints, Fraction(den, g)
