"""The Scorza map on plane quartics.

``S(F)(x)`` is the Aronhold invariant of the polar cubic of ``F`` at ``x``.
The polar is taken by tensor contraction, ``(P_x F)_jkl = sum_i x_i f_ijkl``,
so the 8x8 Aronhold matrix has entries linear in ``x`` and ``S(F)`` is its
Pfaffian.
"""

from __future__ import annotations

from . import aronhold
from .errors import ShapeError
from .forms import Form, polar_contract
from .linalg import Matrix, pfaffian
from .poly import Poly


def _check_quartic(F: Form):
    if F.nvars != 3 or F.degree != 4:
        raise ShapeError(f"expected a plane quartic, got nvars={F.nvars}, degree={F.degree}")


def scorza_matrix(F: Form) -> Matrix:
    """8x8 antisymmetric matrix over Poly in x0, x1, x2."""
    _check_quartic(F)
    polar = polar_contract(F, Poly.gens(3))
    ap = aronhold.instantiate(polar.__getitem__, zero=Poly(3))
    return aronhold.reduce(ap)


def scorza_polynomial(F: Form) -> Poly:
    return pfaffian(scorza_matrix(F), method="matchings")


def scorza_map(F: Form) -> Form:
    p = scorza_polynomial(F)
    if not p:
        return Form(3, 4)
    return Form.from_poly(p, 4)
