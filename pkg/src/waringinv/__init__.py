"""Exact invariants for Waring problems on cubics and quartics."""

from .aronhold import aronhold_invariant, build_a, build_aprime, plane_rank_profile
from .catalecticant import build_c, is_clebsch, segre_degree
from .errors import ConsistencyError, FormSyntaxError, ShapeError, WaringError
from .forms import (
    Form,
    LinearChange,
    act,
    parse_form,
    polar_contract,
    power_of_linear,
    print_form,
    random_form,
    random_linear,
    random_sl,
    sum_of_powers,
)
from .linalg import Matrix, cube_root, det, pfaffian, principal_subpfaffians, rank
from .poly import Poly
from .scorza import scorza_map, scorza_matrix
from .secant7 import build_b, build_block, build_bprime, det_b, in_sigma7, p_invariant

__version__ = "0.1.0"
