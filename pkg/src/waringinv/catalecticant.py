"""Middle catalecticant of quartics, Clebsch quartics, and Segre's degree formula."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ConsistencyError, ShapeError
from .forms import Form, multi_indices
from .linalg import Matrix, det, rank


def quadric_basis(nvars: int) -> list[tuple[int, int]]:
    """Degree-2 indices ordered by largest index, then lexicographically (00, 01, 11, 02, ...)."""
    return sorted(multi_indices(nvars, 2), key=lambda a: (max(a), a))


@dataclass(frozen=True)
class CatalecticantMatrix:
    n: int
    size: int
    matrix: Matrix
    basis: tuple


def build_c(f: Form) -> CatalecticantMatrix:
    if f.degree != 4:
        raise ShapeError(f"catalecticant needs a quartic, got degree {f.degree}")
    basis = quadric_basis(f.nvars)
    m = Matrix([[f[a + b] for b in basis] for a in basis])
    return CatalecticantMatrix(f.nvars - 1, len(basis), m, tuple(basis))


def quadric_vector(v) -> list[Fraction]:
    """Coordinates of the square of a linear form in the quadric basis."""
    return [Fraction(v[i]) * v[j] for i, j in quadric_basis(len(v))]


@dataclass(frozen=True)
class ClebschResult:
    clebsch: bool
    det: Fraction
    rank: int


def is_clebsch(f: Form) -> ClebschResult:
    if f.nvars != 3 or f.degree != 4:
        raise ShapeError(f"expected a plane quartic, got nvars={f.nvars}, degree={f.degree}")
    c = build_c(f).matrix
    d, r = det(c), rank(c)
    if (d == 0) != (r < c.rows):
        raise ConsistencyError("determinant and rank of the catalecticant disagree")
    return ClebschResult(d == 0, d, r)


def segre_degree(n: int, k: int) -> int:
    """Degree of the variety of symmetric (n+1)x(n+1) matrices of rank at most k."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    value = Fraction(1)
    for i in range(n - k + 1):
        value *= Fraction(comb(n + 1 + i, n + 1 - k - i), comb(2 * i + 1, i))
    if value.denominator != 1:
        raise ConsistencyError(f"Segre product for n={n}, k={k} is not an integer: {value}")
    return value.numerator
