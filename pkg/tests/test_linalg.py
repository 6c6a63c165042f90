import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import det_laplace, pfaffian_by_permutations, rank_by_fractions
from waringinv.errors import ShapeError
from waringinv.linalg import (
    Matrix,
    cube_root,
    det,
    integer_cube_root,
    pfaffian,
    principal_subpfaffians,
    rank,
)
from waringinv.poly import Poly


def random_matrix(rng, n, m=None, lo=-4, hi=4, den=3):
    m = n if m is None else m
    return Matrix([[Fraction(rng.randint(lo, hi), rng.randint(1, den)) for _ in range(m)] for _ in range(n)])


def random_skew(rng, n, lo=-4, hi=4, den=3):
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = Fraction(rng.randint(lo, hi), rng.randint(1, den))
            a[i][j], a[j][i] = x, -x
    return Matrix(a)


class TestMatrix:
    def test_shapes_and_access(self):
        m = Matrix([[1, 2, 3], [4, 5, 6]])
        assert m.shape == (2, 3)
        assert m[1, 2] == 6
        assert m.T.shape == (3, 2)
        assert m.delete([0]).tolist() == [[5, 6]]
        with pytest.raises(ShapeError):
            Matrix([[1, 2], [3]])

    def test_multiply(self):
        a = Matrix([[1, 2], [3, 4]])
        assert (a @ Matrix.identity(2)) == a
        assert (a @ a).tolist() == [[7, 10], [15, 22]]

    def test_predicates(self):
        assert Matrix([[1, 2], [2, 1]]).is_symmetric()
        assert Matrix([[0, 2], [-2, 0]]).is_antisymmetric()
        assert not Matrix([[1, 2], [-2, 0]]).is_antisymmetric()


class TestDet:
    def test_examples(self):
        assert det(Matrix([[1, 2], [3, 4]])) == -2
        assert det(Matrix.identity(45)) == 1
        assert det(Matrix([[0, 1], [1, 0]])) == -1
        assert det(Matrix([[1, 2], [2, 4]])) == 0

    def test_non_square(self):
        with pytest.raises(ShapeError):
            det(Matrix([[1, 2, 3]]))

    @pytest.mark.parametrize("seed", range(30))
    def test_bareiss_matches_laplace(self, seed):
        rng = random.Random(seed)
        m = random_matrix(rng, rng.randint(1, 6))
        assert det(m) == det_laplace(m.tolist())

    def test_zero_pivots(self):
        m = Matrix([[0, 0, 1], [0, 2, 0], [3, 0, 0]])
        assert det(m) == det_laplace(m.tolist()) == -6

    @pytest.mark.parametrize("seed", range(10))
    def test_multiplicative(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 7)
        a, b = random_matrix(rng, n), random_matrix(rng, n)
        assert det(a @ b) == det(a) * det(b)


class TestRank:
    def test_examples(self):
        assert rank(Matrix.zeros(4)) == 0
        assert rank(Matrix.identity(7)) == 7
        rng = random.Random(0)
        u = [rng.randint(1, 9) for _ in range(6)]
        v = [rng.randint(1, 9) for _ in range(5)]
        assert rank(Matrix([[a * b for b in v] for a in u])) == 1

    @pytest.mark.parametrize("seed", range(20))
    def test_matches_gauss_jordan(self, seed):
        rng = random.Random(seed)
        n, m, k = rng.randint(1, 8), rng.randint(1, 8), rng.randint(0, 5)
        a = random_matrix(rng, n, k) if k else Matrix.zeros(n, m)
        b = random_matrix(rng, k, m) if k else Matrix.zeros(n, m)
        prod = a @ b if k else a
        r = rank(prod)
        assert r == rank_by_fractions(prod.tolist())
        assert r <= min(n, m, k if k else n)

    @pytest.mark.parametrize("seed", range(10))
    def test_invariant_under_changes(self, seed):
        rng = random.Random(seed)
        n = 6
        u, v = random_matrix(rng, n, 3), random_matrix(rng, 3, n)
        m = u @ v
        r = rank(m)
        perm = list(range(n))
        rng.shuffle(perm)
        assert rank(m.submatrix(perm, list(reversed(perm)))) == r
        g = random_matrix(rng, n)
        while det(g) == 0:
            g = random_matrix(rng, n)
        assert rank(g @ m) == r == rank(m @ g)


class TestPfaffian:
    def test_two_by_two(self):
        assert pfaffian(Matrix([[0, 5], [-5, 0]])) == 5

    def test_four_by_four_symbolic(self):
        # 6 independent variables for a12..a34
        a12, a13, a14, a23, a24, a34 = Poly.gens(6)
        z = Poly(6)
        m = Matrix([
            [z, a12, a13, a14],
            [-a12, z, a23, a24],
            [-a13, -a23, z, a34],
            [-a14, -a24, -a34, z],
        ])
        assert pfaffian(m) == a12 * a34 - a13 * a24 + a14 * a23

    def test_errors(self):
        with pytest.raises(ShapeError):
            pfaffian(Matrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]]))
        with pytest.raises(ShapeError):
            pfaffian(Matrix([[0, 1], [1, 0]]))
        with pytest.raises(ShapeError):
            pfaffian(Matrix([[1, 1], [-1, 0]]))

    def test_empty(self):
        assert pfaffian(Matrix([])) == 1

    @pytest.mark.parametrize("seed", range(20))
    def test_methods_agree_with_permutation_oracle(self, seed):
        rng = random.Random(seed)
        m = random_skew(rng, rng.choice([2, 4, 6]))
        p = pfaffian(m, "elimination")
        assert p == pfaffian(m, "matchings") == pfaffian_by_permutations(m.tolist())
        assert p * p == det(m)

    @pytest.mark.parametrize("seed", range(5))
    def test_sparse_pivoting(self, seed):
        rng = random.Random(seed)
        m = random_skew(rng, 8, lo=-1, hi=1, den=1)
        assert pfaffian(m, "elimination") == pfaffian(m, "matchings")

    def test_rank_four_skew_has_vanishing_subpfaffians(self):
        rng = random.Random(3)

        def rank2(u, v):
            return Matrix([[u[i] * v[j] - u[j] * v[i] for j in range(8)] for i in range(8)])

        vecs = [[rng.randint(-3, 3) for _ in range(8)] for _ in range(4)]
        m = rank2(vecs[0], vecs[1]) + rank2(vecs[2], vecs[3])
        assert rank(m) == 4
        subs = principal_subpfaffians(m, 6)
        assert len(subs) == 28 and not any(subs)
        assert any(principal_subpfaffians(m, 4))

    def test_subpfaffian_edges(self):
        rng = random.Random(0)
        m = random_skew(rng, 6)
        assert principal_subpfaffians(m, 6) == [pfaffian(m)]
        assert not any(principal_subpfaffians(Matrix.zeros(6), 4))
        with pytest.raises(ShapeError):
            principal_subpfaffians(m, 3)

    def test_symbolic_order_limit(self):
        x = Poly.gens(1)[0]
        z = Poly(1)
        n = 10
        m = Matrix([[x if j == i + 1 else -x if i == j + 1 else z for j in range(n)] for i in range(n)])
        with pytest.raises(ShapeError):
            pfaffian(m)


class TestCubeRoot:
    def test_examples(self):
        assert cube_root(Fraction(-8, 27)) == Fraction(-2, 3)
        assert cube_root(0) == 0
        assert cube_root(2) is None
        assert cube_root(Fraction(1, 4)) is None

    @given(st.integers(-(10**40), 10**40))
    def test_exact_cubes(self, n):
        assert integer_cube_root(n**3) == n

    @settings(max_examples=200)
    @given(st.integers(2, 10**30))
    def test_non_cubes(self, n):
        r = integer_cube_root(n)
        assert r is None or r**3 == n
        if r is None:
            root = round(n ** (1 / 3))
            assert all(k**3 != n for k in range(max(root - 2, 0), root + 3))
