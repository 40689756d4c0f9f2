"""Exact invariants for 2/q-surgery on knots with Alexander polynomial t^2 - 3t + 1.

Cyclotomic norms, Dedekind sums, Casson-Walker-Lescop invariants of
2-bridge-link and Seifert surgeries, and a case-by-case elimination of
Seifert fibred candidates.
"""

from .algebra import (
    LaurentPoly1,
    LaurentPoly2,
    Rational,
    cyclotomic_poly,
    format_rational,
    parse_rational,
    resultant,
    smith_normal_form,
)
from .dedekind import dedekind_S, dedekind_sum, sawtooth
from .errors import DomainError, InvariantViolation
from .kernels import BACKEND
from .lescop import (
    DSequence,
    LinkingMatrix,
    bracket_K,
    bracket_L,
    lescop_M_from_assumptions,
    lescop_seifert_X,
    lescop_two_bridge,
    linking_number,
)
from .norms import diagonal_torsion_norm, fig8_torsion_norm, norm_d
from .presentations import (
    MPresentation,
    SeifertParams,
    XPresentation,
    coefficient_equation,
    euler_e,
    h1_group_from_linking,
    h1_order_M_alpha_beta_1,
    h1_order_X,
    lift_double_cover,
)
from .verifier import (
    EliminationTrace,
    KnotGateInput,
    Rule,
    Verdict,
    check_inequality_24,
    run_case_analysis,
    sweep_parameters,
)

__version__ = "0.1.0"
