"""The Aronhold invariant of ternary cubics as the Pfaffian of an 8x8 skew matrix.

The 9x9 matrix acts on endomorphisms of a 3-dimensional space,
``M_{(a,b),c}: w -> (e_a ^ e_b ^ w) e_c``, listed in the order
``(01)0, (01)1, (01)2, (02)0, ..., (12)2``.  Entry (p, q) is the trace
pairing of the contraction of ``M_q`` with ``M_p``.  Every entry is ``±v_ijk``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import ConsistencyError, ShapeError
from .forms import Form
from .linalg import Matrix, pfaffian, principal_subpfaffians, rank

BASIS = [((a, b), c) for (a, b) in ((0, 1), (0, 2), (1, 2)) for c in range(3)]

# deleting any one of these (1-based) gives the 8x8 matrix on trace-free endomorphisms
TRACE_INDICES = (3, 5, 7)
DEFAULT_DELETED = 3

# reference table; "-012" means -v_012
_GOLDEN = """
   0  222 -122    0 -122  112    0  022 -012
-222    0  022  122    0 -012 -022    0  002
 122 -022    0 -112  012    0  012 -002    0
   0 -122  112    0  112 -111    0 -012  011
 122    0 -012 -112    0  011  012    0 -001
-112  012    0  111 -011    0 -011  001    0
   0  022 -012    0 -012  011    0  002 -001
-022    0  002  012    0 -001 -002    0  000
 012 -002    0 -011  001    0  001 -000    0
"""


def _eps(*idx) -> int:
    if len(set(idx)) != len(idx):
        return 0
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign


def _endomorphism(basis_elem):
    (a, b), c = basis_elem
    return [[_eps(a, b, w) if r == c else 0 for w in range(3)] for r in range(3)]


def _contract(m, i, j, k):
    # endomorphism w -> (M(e_i) ^ e_j ^ w) e_k
    col = [m[r][i] for r in range(3)]
    out = [[0] * 3 for _ in range(3)]
    for w in range(3):
        out[k][w] = sum(col[r] * _eps(r, j, w) for r in range(3))
    return out


def _trace_of_product(x, y) -> int:
    return sum(x[r][s] * y[s][r] for r in range(3) for s in range(3))


@lru_cache(maxsize=None)
def _contraction_template():
    """Entry (p, q) as ``{sorted triple: integer coefficient}``, summed over ordered triples."""
    ends = [_endomorphism(b) for b in BASIS]
    template = []
    for p in range(9):
        row = []
        for q in range(9):
            entry: dict = {}
            for i, j, k in product(range(3), repeat=3):
                c = _trace_of_product(_contract(ends[q], i, j, k), ends[p])
                if c:
                    key = tuple(sorted((i, j, k)))
                    entry[key] = entry.get(key, 0) + c
            row.append({a: c for a, c in entry.items() if c})
        template.append(row)
    return template


def _parse_golden():
    table = []
    for line in _GOLDEN.strip().splitlines():
        row = []
        for cell in line.split():
            if cell == "0":
                row.append({})
            else:
                sign = -1 if cell.startswith("-") else 1
                row.append({tuple(int(ch) for ch in cell.lstrip("-")): sign})
        table.append(row)
    return table


@lru_cache(maxsize=None)
def template():
    """The 9x9 coefficient template, checked against the reference table."""
    derived = _contraction_template()
    if derived != _parse_golden():
        raise ConsistencyError("contraction formula disagrees with the reference 9x9 table")
    return derived


def _check_cubic(phi: Form):
    if phi.nvars != 3 or phi.degree != 3:
        raise ShapeError(f"expected a ternary cubic, got nvars={phi.nvars}, degree={phi.degree}")


def instantiate(coord, zero=Fraction(0)) -> Matrix:
    """Fill the template with ring elements ``coord(alpha)``."""
    rows = []
    for trow in template():
        row = []
        for entry in trow:
            x = zero
            for alpha, c in entry.items():
                val = coord(alpha)
                x = x + val if c == 1 else x - val if c == -1 else x + c * val
            row.append(x)
        rows.append(row)
    return Matrix(rows)


def build_aprime(phi: Form) -> Matrix:
    _check_cubic(phi)
    return instantiate(phi.__getitem__)


@dataclass(frozen=True)
class AronholdMatrices:
    aprime: Matrix
    a: Matrix
    deleted_index: int


def reduce(aprime: Matrix, deleted_index: int = DEFAULT_DELETED) -> Matrix:
    if deleted_index not in TRACE_INDICES:
        raise ShapeError(f"deleted index must be one of {TRACE_INDICES}")
    return aprime.delete([deleted_index - 1])


def build_a(phi: Form, deleted_index: int = DEFAULT_DELETED) -> AronholdMatrices:
    ap = build_aprime(phi)
    return AronholdMatrices(ap, reduce(ap, deleted_index), deleted_index)


def aronhold_invariant(phi: Form, deleted_index: int = DEFAULT_DELETED) -> Fraction:
    """Pfaffian of the 8x8 matrix; a degree-4 invariant vanishing on sums of three cubes."""
    return pfaffian(build_a(phi, deleted_index).a)


@dataclass(frozen=True)
class RankProfile:
    rank_a: int
    in_sigma: dict

    def as_dict(self) -> dict:
        return {"rank_a": self.rank_a, "in_sigma": {str(k): v for k, v in self.in_sigma.items()}}


def plane_rank_profile(phi: Form) -> RankProfile:
    """Secant-variety membership of a plane cubic: in sigma_k iff rank <= 2k."""
    a = build_a(phi).a
    r = rank(a)
    in_sigma = {k: r <= 2 * k for k in (1, 2, 3)}
    subpf_vanish = not any(principal_subpfaffians(a, 6))
    if subpf_vanish != in_sigma[2]:
        raise ConsistencyError(f"rank {r} disagrees with the 6x6 subpfaffian test")
    return RankProfile(r, in_sigma)
