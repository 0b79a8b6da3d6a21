"""Dense exact linear algebra on lists of rows.

Entries are Fractions, FqElems or ints (ints are promoted to Fraction where a
division is needed).  Characteristic polynomials use reduction to upper
Hessenberg form by elementary similarities followed by the standard
Hessenberg recurrence; everything stays exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .fields import FqElem, GF
from .poly import UPoly

Matrix = list[list]


class DimensionError(ValueError):
    pass


def _field_of(m: Sequence[Sequence]) -> GF | None:
    for row in m:
        for x in row:
            if isinstance(x, FqElem):
                return x.field
    return None


def _promote(m: Sequence[Sequence]) -> tuple[Matrix, GF | None]:
    f = _field_of(m)
    if f is None:
        return [[Fraction(x) for x in row] for row in m], None
    return [[f(x) for x in row] for row in m], f


def shape(m: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise DimensionError("ragged matrix")
    return rows, cols


def identity(n: int, one=1) -> Matrix:
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    n, k = shape(a)
    k2, m = shape(b)
    if k != k2:
        raise DimensionError(f"cannot multiply {n}x{k} by {k2}x{m}")
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(j, x) for j, x in enumerate(row) if x]
        out.append([sum((x * col[j] for j, x in nz), 0 * col[0] if col else 0) for col in bt])
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v) if x and y), 0 * v[0] if v else 0) for row in a]


def det(m: Sequence[Sequence]):
    n, c = shape(m)
    if n != c:
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    if all(isinstance(x, int) for row in m for x in row):
        return bareiss_det([list(r) for r in m])
    a, _ = _promote(m)
    result = a[0][0] * 0 + 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return a[0][0] * 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        pv = a[col][col]
        result = result * pv
        inv = 1 / pv
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                ar, ac = a[r], a[col]
                for j in range(col, n):
                    if ac[j]:
                        ar[j] = ar[j] - f * ac[j]
    return result


def bareiss_det(a: Matrix) -> int:
    """Fraction-free determinant of an integer matrix (destroys ``a``)."""
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k]), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ai, ak = a[i], a[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * akk - aik * ak[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def row_reduce(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a, _ = _promote(m)
    rows, cols = len(a), (len(a[0]) if a else 0)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m or not m[0]:
        return 0
    return len(row_reduce(m)[1])


def nullspace(m: Sequence[Sequence]) -> list[list]:
    """Basis of {x : m x = 0}, one vector per free column."""
    rows, cols = shape(m)
    if rows == 0:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    rref, pivots = row_reduce(m)
    zero = rref[0][0] * 0
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * cols
        v[fc] = zero + 1
        for i, pc in enumerate(pivots):
            v[pc] = -rref[i][fc]
        basis.append(v)
    return basis


class SingularSystem(ValueError):
    pass


class InconsistentSystem(ValueError):
    pass


def solve(a: Sequence[Sequence], b: Sequence) -> list:
    """Unique solution of a x = b; raises on rank deficiency or inconsistency."""
    rows, cols = shape(a)
    aug = [list(r) + [bi] for r, bi in zip(a, b)]
    rref, pivots = row_reduce(aug)
    if cols in pivots:
        raise InconsistentSystem("linear system has no solution")
    if len(pivots) < cols:
        raise SingularSystem(f"rank {len(pivots)} < {cols} unknowns")
    return [rref[i][cols] for i in range(cols)]


def inverse(m: Sequence[Sequence]) -> Matrix:
    n, c = shape(m)
    if n != c:
        raise DimensionError("inverse of a non-square matrix")
    a, _ = _promote(m)
    one = a[0][0] * 0 + 1
    aug = [row + [one if i == j else one * 0 for j in range(n)] for i, row in enumerate(a)]
    rref, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise SingularSystem("matrix is singular")
    return [row[n:] for row in rref]


def hessenberg(m: Sequence[Sequence]) -> Matrix:
    """Upper Hessenberg matrix similar to m (Gaussian similarity transforms)."""
    a, _ = _promote(m)
    n = len(a)
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if a[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            a[piv], a[j + 1] = a[j + 1], a[piv]
            for row in a:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = 1 / a[j + 1][j]
        for i in range(j + 2, n):
            if not a[i][j]:
                continue
            f = a[i][j] * inv
            ai, aj = a[i], a[j + 1]
            for c in range(n):
                if aj[c]:
                    ai[c] = ai[c] - f * aj[c]
            for row in a:
                if row[i]:
                    row[j + 1] = row[j + 1] + f * row[i]
    return a


def charpoly(m: Sequence[Sequence]) -> UPoly:
    """Monic det(tI - m)."""
    n, c = shape(m)
    if n != c:
        raise DimensionError("characteristic polynomial of a non-square matrix")
    field = _field_of(m)
    if n == 0:
        return UPoly([1], field)
    h = hessenberg(m)
    t = UPoly.t(field)
    polys = [UPoly([1], field)]
    for k in range(n):
        pk = (t - h[k][k]) * polys[k]
        prod = h[k][k] * 0 + 1
        for i in range(k - 1, -1, -1):
            prod = prod * h[i + 1][i]
            if not prod:
                break
            if h[i][k]:
                pk = pk - polys[i] * (h[i][k] * prod)
        polys.append(pk)
    return polys[n]
