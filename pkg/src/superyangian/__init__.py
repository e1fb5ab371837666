"""Odd reflections for super Yangian l-weights, q-characters and Bethe equations.

Everything is exact: rationals are :class:`fractions.Fraction`, l-weight
components are reduced ratios of monic polynomials with rational roots.
"""

from .bethe import BAESystem, bae_check, bae_divisibility, bae_residual, fermionic_reproduce
from .diffop import RatFuncDense, ShiftOpSeries, build_operator, sos_eq, sos_inverse_factor, sos_mul
from .errors import AlgebraError
from .lweight import (
    LWeight,
    QChar,
    RatB,
    coprime_ratio,
    finite_dim_check,
    lw_div,
    lw_eq,
    lw_mul,
    shift_ladder_solve,
    simple_lroot,
    varpi,
    xfactor,
)
from .parity import (
    GlWeight,
    Partition,
    ParitySeq,
    alpha_pair,
    alphabet_order,
    hook_weight,
    is_hook,
    kappa,
    swap_at,
    weight_leq,
)
from .polycore import DensePoly, FactoredPoly, dp_rational_roots
from .qchar11 import qchar_dim, qchar_gl11, qchar_reflect_gl11
from .reflection import reflect, reflect_path, reflect_to
from .tableaux import SkewDiagram, count_syt, enumerate_ssyt, skew_cells, skew_qchar, tableau_lweight

__version__ = "0.1.0"
