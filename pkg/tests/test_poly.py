from fractions import Fraction

from hypothesis import given, strategies as st

from waringinv.poly import Poly

x0, x1, x2 = Poly.gens(3)


def test_arithmetic():
    p = (x0 + x1) ** 2
    assert p == x0 * x0 + 2 * x0 * x1 + x1 * x1
    assert p - p == 0
    assert not (p - p)
    assert (x0 - 1) * 3 == 3 * x0 - 3


def test_evaluation_and_degree():
    p = x0**2 * x2 - Fraction(1, 2) * x1**3
    assert p(1, 2, 3) == 3 - 4
    assert p.is_homogeneous(3)
    assert not (p + x0).is_homogeneous()
    assert p.total_degree() == 3


def test_evaluate_at_polys():
    p = x0 * x1
    assert p(x1, x2, x0) == x1 * x2


coeffs = st.integers(-5, 5)


@given(st.lists(coeffs, min_size=3, max_size=3), st.lists(coeffs, min_size=3, max_size=3),
       st.lists(coeffs, min_size=3, max_size=3))
def test_ring_axioms_under_evaluation(a, b, pt):
    p = a[0] * x0 + a[1] * x1 * x2 + a[2]
    q = b[0] * x2**2 + b[1] * x0 + b[2]
    assert (p * q)(*pt) == p(*pt) * q(*pt)
    assert (p + q)(*pt) == p(*pt) + q(*pt)
