"""Exact dense linear algebra over the rationals (and, for Pfaffians, over Poly)."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from numbers import Rational

from .errors import ShapeError


class Matrix:
    """Dense row-major matrix over an exact ring.

    Entries are whatever ring elements are passed in (ints are promoted to
    Fractions).  Matrices are not mutated after construction.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data, cols: int | None = None):
        if cols is not None:
            entries = list(data)
            if cols <= 0 and entries:
                raise ShapeError("positive column count required")
            rows = len(entries) // cols if cols else 0
            if rows * cols != len(entries):
                raise ShapeError("entry count is not a multiple of the column count")
        else:
            data = [list(r) for r in data]
            rows = len(data)
            cols = len(data[0]) if data else 0
            if any(len(r) != cols for r in data):
                raise ShapeError("ragged rows")
            entries = [x for r in data for x in r]
        self.rows = rows
        self.cols = cols
        self.entries = [Fraction(x) if isinstance(x, int) else x for x in entries]

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        return cls([Fraction(0)] * (rows * cols), cols) if cols else cls([[]] * 0)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> Matrix:
        return Matrix([[self[i, j] for i in range(self.rows)] for j in range(self.cols)])

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def is_antisymmetric(self) -> bool:
        n = self.rows
        return self.is_square() and all(
            self[i, j] == -self[j, i] for i in range(n) for j in range(i, n)
        )

    def submatrix(self, rows, cols) -> Matrix:
        return Matrix([[self[i, j] for j in cols] for i in rows])

    def principal(self, indices) -> Matrix:
        return self.submatrix(indices, indices)

    def delete(self, indices) -> Matrix:
        """Remove the given rows and the same-numbered columns (0-based)."""
        drop = set(indices)
        keep_r = [i for i in range(self.rows) if i not in drop]
        keep_c = [j for j in range(self.cols) if j not in drop]
        return self.submatrix(keep_r, keep_c)

    def map(self, fn) -> Matrix:
        return Matrix([fn(x) for x in self.entries], self.cols) if self.cols else Matrix([])

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ShapeError("shape mismatch in addition")
        return Matrix([a + b for a, b in zip(self.entries, other.entries)], self.cols)

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ShapeError("shape mismatch in subtraction")
        return Matrix([a - b for a, b in zip(self.entries, other.entries)], self.cols)

    def __neg__(self) -> Matrix:
        return self.map(lambda x: -x)

    def __mul__(self, scalar) -> Matrix:
        return self.map(lambda x: x * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [other.row(k) for k in range(other.rows)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            acc = [Fraction(0)] * other.cols
            for k, a in enumerate(r):
                if a:
                    bk = ocols[k]
                    for j in range(other.cols):
                        acc[j] = acc[j] + a * bk[j]
            out.append(acc)
        return Matrix(out)

    def apply(self, vec) -> list:
        if len(vec) != self.cols:
            raise ShapeError("vector length mismatch")
        return [sum((a * x for a, x in zip(self.row(i), vec) if a), Fraction(0)) for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.entries, other.entries))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    def format(self) -> str:
        """Aligned text rendering, one row per line."""
        cells = [[str(x) for x in self.row(i)] for i in range(self.rows)]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def _integer_rows(M: Matrix) -> tuple[list[list[int]], int]:
    """Scale each row to integers; returns the rows and the product of scale factors."""
    out, factor = [], 1
    for i in range(M.rows):
        r = [Fraction(x) for x in M.row(i)]
        m = lcm(*(x.denominator for x in r)) if r else 1
        factor *= m
        out.append([int(x * m) for x in r])
    return out, factor


def det(M: Matrix) -> Fraction:
    """Determinant by Bareiss fraction-free elimination on denominator-cleared rows."""
    if not M.is_square():
        raise ShapeError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    a, factor = _integer_rows(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            if aik:
                for j in range(k + 1, n):
                    ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            else:
                for j in range(k + 1, n):
                    ri[j] = (ri[j] * akk) // prev
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], factor)


def rank(M: Matrix) -> int:
    """Rank by fraction-free elimination with full pivoting."""
    a, _ = _integer_rows(M)
    nr, nc = M.rows, M.cols
    r = 0
    prev = 1
    cols = list(range(nc))
    while r < nr and r < nc:
        pivot = next(((i, j) for i in range(r, nr) for j in range(r, nc) if a[i][cols[j]]), None)
        if pivot is None:
            break
        pi, pj = pivot
        a[r], a[pi] = a[pi], a[r]
        cols[r], cols[pj] = cols[pj], cols[r]
        piv = a[r][cols[r]]
        rr = a[r]
        for i in range(r + 1, nr):
            ri = a[i]
            f = ri[cols[r]]
            for jj in range(r + 1, nc):
                j = cols[jj]
                ri[j] = (ri[j] * piv - f * rr[j]) // prev
            ri[cols[r]] = 0
        prev = piv
        r += 1
    return r


def _check_skew(M: Matrix):
    if not M.is_square():
        raise ShapeError("Pfaffian of a non-square matrix")
    if M.rows % 2:
        raise ShapeError(f"Pfaffian of a matrix of odd order {M.rows}")
    if not M.is_antisymmetric():
        raise ShapeError("Pfaffian of a matrix that is not antisymmetric")


def _pfaffian_elimination(M: Matrix) -> Fraction:
    n = M.rows
    a = [[Fraction(x) for x in M.row(i)] for i in range(n)]
    pf = Fraction(1)
    for k in range(0, n, 2):
        p = next((j for j in range(k + 1, n) if a[k][j]), None)
        if p is None:
            return Fraction(0)
        if p != k + 1:
            a[k + 1], a[p] = a[p], a[k + 1]
            for r in a:
                r[k + 1], r[p] = r[p], r[k + 1]
            pf = -pf
        piv = a[k][k + 1]
        pf *= piv
        r0, r1 = a[k], a[k + 1]
        for i in range(k + 2, n):
            ai = a[i]
            for j in range(k + 2, n):
                ai[j] += (r1[i] * r0[j] - r0[i] * r1[j]) / piv
    return pf


def _pfaffian_matchings(entries, idx):
    # expansion along the first remaining index: Pf = sum_j (-1)^(j-1) a_{0j} Pf(minor)
    if not idx:
        return Fraction(1)
    first, rest = idx[0], idx[1:]
    total = Fraction(0)
    for pos, j in enumerate(rest):
        a = entries(first, j)
        if a == 0:
            continue
        sub = _pfaffian_matchings(entries, rest[:pos] + rest[pos + 1:])
        term = a * sub
        total = total - term if pos % 2 else total + term
    return total


MAX_SYMBOLIC_PFAFFIAN = 8


def pfaffian(M: Matrix, method: str = "auto"):
    """Pfaffian of an even-order antisymmetric matrix.

    ``method`` is ``"elimination"`` (rationals only), ``"matchings"`` (signed
    sum over perfect matchings, any ring, order at most 8 for non-rational
    entries) or ``"auto"``.
    """
    _check_skew(M)
    rational = all(isinstance(x, Rational) for x in M.entries)
    if method == "auto":
        method = "elimination" if rational else "matchings"
    if method == "elimination":
        if not rational:
            raise ShapeError("elimination Pfaffian needs rational entries")
        return _pfaffian_elimination(M)
    if method == "matchings":
        if not rational and M.rows > MAX_SYMBOLIC_PFAFFIAN:
            raise ShapeError(f"symbolic Pfaffian limited to order {MAX_SYMBOLIC_PFAFFIAN}")
        return _pfaffian_matchings(lambda i, j: M[i, j], tuple(range(M.rows)))
    raise ValueError(f"unknown Pfaffian method {method!r}")


def principal_subpfaffians(M: Matrix, k: int, method: str = "auto") -> list:
    """Pfaffians of all principal k x k submatrices, subsets in lexicographic order."""
    _check_skew(M)
    if k % 2 or not 0 <= k <= M.rows:
        raise ShapeError(f"invalid subpfaffian order {k} for a matrix of order {M.rows}")
    return [pfaffian(M.principal(s), method) for s in combinations(range(M.rows), k)]


def integer_cube_root(n: int) -> int | None:
    """Exact cube root of an integer, or None when it is not a perfect cube."""
    if n < 0:
        r = integer_cube_root(-n)
        return None if r is None else -r
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    return x if x * x * x == n else None


def cube_root(r) -> Fraction | None:
    r = Fraction(r)
    num = integer_cube_root(r.numerator)
    den = integer_cube_root(r.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)
