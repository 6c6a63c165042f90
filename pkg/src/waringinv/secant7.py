"""The degree-15 invariant of quinary cubics and membership in the 7-secant variety.

For a cubic in five variables the 50x50 symmetric matrix ``B'`` lives on the
basis ``(e_s ^ e_t) (x) (e_i ^ e_j ^ e_k ^ e_l)``, pairs and 4-subsets both in
lexicographic order.  Dropping five rows and columns gives the 45x45 matrix
``B`` with ``det B = 2 P^3``; ``P`` cuts out the cubics that are sums of
seven cubes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import ConsistencyError, ShapeError
from .forms import Form
from .linalg import Matrix, cube_root, det, rank

N = 5
PAIRS = list(combinations(range(N), 2))
QUADS = list(combinations(range(N), 4))
BASIS = [(p, q) for p in PAIRS for q in QUADS]
DELETED = (5, 10, 15, 16, 20)  # 1-based rows/columns removed from B'
MAX_RANK_ON_SIGMA7 = 42


def _eps(*idx) -> int:
    if len(set(idx)) != len(idx):
        return 0
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign


def _missing(quad) -> int:
    return (set(range(N)) - set(quad)).pop()


def _check_cubic(phi: Form):
    if phi.nvars != N or phi.degree != 3:
        raise ShapeError(f"expected a quinary cubic, got nvars={phi.nvars}, degree={phi.degree}")


def build_block(phi: Form, i: int) -> Matrix:
    """5x5 block with ``(-1)^(s+t) v_ist`` at 1-based position ``(5-s, 5-t)``."""
    _check_cubic(phi)
    if not 0 <= i < N:
        raise ShapeError(f"block index {i} out of range")
    rows = [[Fraction(0)] * N for _ in range(N)]
    for s in range(N):
        for t in range(N):
            rows[4 - s][4 - t] = (-1) ** (s + t) * phi[(i, s, t)]
    return Matrix(rows)


def block_sign(row_pair, col_pair):
    """``(sign, m)`` for the block at (row_pair, col_pair), or None for a zero block."""
    if set(row_pair) & set(col_pair):
        return None
    (m,) = set(range(N)) - set(row_pair) - set(col_pair)
    return _eps(*row_pair, *col_pair, m), m


@lru_cache(maxsize=None)
def _sign_rule_template():
    # entries as (row, col, sorted triple, sign): block eps * A_m
    out = []
    for r, (p, q) in enumerate(BASIS):
        s = _missing(q)
        for c, (p2, q2) in enumerate(BASIS):
            bs = block_sign(p, p2)
            if bs is None:
                continue
            eps, m = bs
            t = _missing(q2)
            out.append((r, c, tuple(sorted((m, s, t))), eps * (-1) ** (s + t)))
    return tuple(out)


@lru_cache(maxsize=None)
def _contraction_template():
    # sum over ordered (i, j, k) of [omega ^ e_i] [xi ^ e_j ^ xi'] [e_k ^ omega']
    acc: dict = {}
    for r, (xi, om) in enumerate(BASIS):
        for c, (xi2, om2) in enumerate(BASIS):
            for i in range(N):
                a = _eps(*om, i)
                if not a:
                    continue
                for k in range(N):
                    b = _eps(k, *om2)
                    if not b:
                        continue
                    for j in range(N):
                        e = _eps(*xi, j, *xi2)
                        if e:
                            key = (r, c, tuple(sorted((i, j, k))))
                            acc[key] = acc.get(key, 0) + a * b * e
    return tuple((r, c, alpha, v) for (r, c, alpha), v in sorted(acc.items()) if v)


@lru_cache(maxsize=None)
def template():
    """Nonzero entries of ``B'`` as (row, col, triple, ±1); both constructions must agree."""
    rule = tuple(sorted(_sign_rule_template()))
    direct = tuple(sorted(_contraction_template()))
    if rule != direct:
        raise ConsistencyError("block sign rule disagrees with the direct contraction")
    return rule


def build_bprime(phi: Form) -> Matrix:
    _check_cubic(phi)
    n = len(BASIS)
    entries = [Fraction(0)] * (n * n)
    for r, c, alpha, sign in template():
        v = phi[alpha]
        if v:
            entries[r * n + c] = v if sign == 1 else -v
    return Matrix(entries, n)


@dataclass(frozen=True)
class SevenSecantMatrices:
    blocks: tuple
    bprime: Matrix
    b: Matrix
    deleted_indices: tuple = DELETED


def build_b(phi: Form) -> SevenSecantMatrices:
    bp = build_bprime(phi)
    blocks = tuple(build_block(phi, i) for i in range(N))
    return SevenSecantMatrices(blocks, bp, bp.delete([k - 1 for k in DELETED]))


def _b_only(phi: Form) -> Matrix:
    return build_bprime(phi).delete([k - 1 for k in DELETED])


def kernel_vector(v) -> list[Fraction]:
    """Coordinates of ``w -> v ^ w`` on the 50-element basis; ``B'`` kills it."""
    if len(v) != N:
        raise ShapeError("vector must have 5 entries")
    out = [Fraction(0)] * len(BASIS)
    for a in range(N):
        if not v[a]:
            continue
        for u in range(N):
            if u == a:
                continue
            pair = (min(a, u), max(a, u))
            quad = tuple(x for x in range(N) if x != u)
            sign = (-1) ** u * (1 if a < u else -1)
            out[BASIS.index((pair, quad))] += sign * Fraction(v[a])
    return out


def image_functionals() -> list[list[int]]:
    """Five row vectors annihilating every column of ``B'`` (the contraction to the top power)."""
    out = []
    for m in range(N):
        row = [0] * len(BASIS)
        for k in range(N):
            if k == m:
                continue
            pair = (min(m, k), max(m, k))
            quad = tuple(x for x in range(N) if x != k)
            zeta = tuple(x for x in range(N) if x not in pair)
            row[BASIS.index((pair, quad))] = (-1) ** k * _eps(*zeta, *pair) * _eps(*zeta, k) * _eps(m, *sorted(set(zeta) | {k}))
        out.append(row)
    return out


def det_b(phi: Form) -> Fraction:
    return det(_b_only(phi))


def p_invariant(phi: Form) -> Fraction:
    """The rational ``P`` with ``2 P^3 = det B``."""
    d = det_b(phi)
    p = cube_root(d / 2)
    if p is None:
        raise ConsistencyError(f"det B = {d} is not twice a rational cube")
    return p


@dataclass(frozen=True)
class Sigma7Result:
    member: bool
    rank_b: int
    det: Fraction


def in_sigma7(phi: Form) -> Sigma7Result:
    b = _b_only(phi)
    d = det(b)
    r = rank(b)
    member = d == 0
    if member and r > MAX_RANK_ON_SIGMA7:
        raise ConsistencyError(f"det B vanishes but rank B = {r} > {MAX_RANK_ON_SIGMA7}")
    if not member and r != len(BASIS) - len(DELETED):
        raise ConsistencyError(f"det B = {d} is nonzero but rank B = {r}")
    return Sigma7Result(member, r, d)
