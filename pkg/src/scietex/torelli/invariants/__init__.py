"""
The invariant ring I_{g,s}, isomorphic to the tautological ring of the s-fold fiber power of
the universal abelian variety restricted to a fiber.

Provides the presentation, integration by determinant coefficient extraction, the Gorenstein
pairing, Capelli differentiation and the tautological projection of generalized product loci.

Classes:
    - Sym2Index: Unordered index pair of a generator.
    - InvClass: Polynomial in the generators theta_i and eta_ij.
"""

from .exceptions import SingularSystem, MonomialSyntaxError, InvariantCapExceeded
from .ring import (
    Sym2Index,
    InvClass,
    sym2_indices,
    inv_names,
    inv_ring,
    matrix_names,
    matrix_ring,
    fold_dimension,
    check_caps,
    parse_monomial,
    monomials,
    det_matrix,
    det_power,
    integrate_monomial,
    integrate,
    full_pairing,
    monomial_weight,
    quotient_basis,
    dims,
    gram_matrix,
    gram_rows,
    normal_form,
    is_zero_class,
    relation_generators,
    relation_basis,
    span_rank,
    iota,
    socle_class,
    pairing_kernel_dimension,
)
from .projection import (
    kappa,
    capelli_check,
    project_pr_formula,
    project_pr_solve,
    pr_prefactor,
    pr_projection,
    pr_general_r,
    taut_product_pr,
)

__all__ = [
    "SingularSystem",
    "MonomialSyntaxError",
    "InvariantCapExceeded",
    "Sym2Index",
    "InvClass",
    "sym2_indices",
    "inv_names",
    "inv_ring",
    "matrix_names",
    "matrix_ring",
    "fold_dimension",
    "check_caps",
    "parse_monomial",
    "monomials",
    "det_matrix",
    "det_power",
    "integrate_monomial",
    "integrate",
    "full_pairing",
    "monomial_weight",
    "quotient_basis",
    "dims",
    "gram_matrix",
    "gram_rows",
    "normal_form",
    "is_zero_class",
    "relation_generators",
    "relation_basis",
    "span_rank",
    "iota",
    "socle_class",
    "pairing_kernel_dimension",
    "kappa",
    "capelli_check",
    "project_pr_formula",
    "project_pr_solve",
    "pr_prefactor",
    "pr_projection",
    "pr_general_r",
    "taut_product_pr",
]
