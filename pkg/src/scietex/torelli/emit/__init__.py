"""
Tautological expressions on compact-type moduli spaces, Abel-Jacobi pullbacks, closed-form
constants, divisor-sum identity checks and script generation for an external
tautological-ring calculator.

Classes:
    - StableTree: Stable graph of compact type with leg labels.
    - DecoratedGraphTerm: Coefficient, stratum and decoration monomial.
    - TautExpr: Normal-form linear combination of decorated terms.
    - ConstantsStore: Named access to the closed-form constants.
    - ScriptDialect: Base class of script generators.
    - AdmcyclesDialect: The ``v1`` script dialect.
"""

from .exceptions import AmbientMismatch, BadMatrix, OutOfRange, UnknownConstant, UnsupportedDialect
from .taut_expr import (
    Decoration,
    StableTree,
    DecoratedGraphTerm,
    TautExpr,
    parse_symbol,
    symbol_degree,
    normalize_decoration,
    taut_expr_to_json,
    taut_expr_from_json,
    lambda_restriction,
    lambda_product,
    decoration_text,
)
from .strata import forget_pullback, branch_leg, split_vertex, restrict_to_split
from .constants import (
    bernoulli,
    abs_bernoulli,
    gamma,
    jg_table,
    taut_product,
    nl_projection_coeff,
    pr_prefactor,
    ConstantsStore,
    constants,
)
from .abel_jacobi import (
    theta_pullback,
    theta_matrix_pullback,
    eta_pullback,
    b_matrix,
    z_matrix,
    pullback_class,
    zero_section_pullback,
    pr_pullback,
    delta_class,
)
from .identities import sigma, hecke_factor, eisenstein_lhs, eisenstein_identity_check
from .scripts import (
    TOOL_NAME,
    ScriptDialect,
    AdmcyclesDialect,
    input_digest,
    header_line,
    get_dialect,
    emit_script,
    delta_emit,
)

__all__ = [
    "AmbientMismatch",
    "BadMatrix",
    "OutOfRange",
    "UnknownConstant",
    "UnsupportedDialect",
    "Decoration",
    "StableTree",
    "DecoratedGraphTerm",
    "TautExpr",
    "parse_symbol",
    "symbol_degree",
    "normalize_decoration",
    "taut_expr_to_json",
    "taut_expr_from_json",
    "lambda_restriction",
    "lambda_product",
    "decoration_text",
    "forget_pullback",
    "branch_leg",
    "split_vertex",
    "restrict_to_split",
    "bernoulli",
    "abs_bernoulli",
    "gamma",
    "jg_table",
    "taut_product",
    "nl_projection_coeff",
    "pr_prefactor",
    "ConstantsStore",
    "constants",
    "theta_pullback",
    "theta_matrix_pullback",
    "eta_pullback",
    "b_matrix",
    "z_matrix",
    "pullback_class",
    "zero_section_pullback",
    "pr_pullback",
    "delta_class",
    "sigma",
    "hecke_factor",
    "eisenstein_lhs",
    "eisenstein_identity_check",
    "TOOL_NAME",
    "ScriptDialect",
    "AdmcyclesDialect",
    "input_digest",
    "header_line",
    "get_dialect",
    "emit_script",
    "delta_emit",
]
