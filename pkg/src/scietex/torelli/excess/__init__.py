"""
Excess intersection contributions of the Torelli pullback of product loci.

Computes Cont_T for every mu-colored extremal tree by the smoothing recursion in the local
model, substitutes it into psi- and lambda-classes on the stratum of T and sums the terms.

Classes:
    - LocalModel: Chern data of the normal bundle at a stratum.
    - ContPoly: Contribution of a tree.
    - PullbackTerm: Substituted contribution of one tree.
"""

from .exceptions import NotIrreducible, NotDivisible, RankOverflow
from .local_model import LocalModel, local_model
from .contribution import (
    ContPoly,
    cont_irreducible,
    cont_recursive,
    pushforward,
    to_chern_form,
    to_root_form,
    contribution_table,
    recursion_residual,
    is_root_symmetric,
    degree_check,
    render_contribution,
    cont_to_dict,
    cont_from_dict,
)
from .substitution import (
    box_tensor_chern,
    half_edges,
    graph_of_tree,
    normal_bundle_chern,
    substitute,
)
from .pullback import (
    PullbackTerm,
    codimension,
    tautological_dimension_bound,
    vanishing_predicate,
    nontrivial_cases,
    pullback_terms,
    torelli_pullback,
)

__all__ = [
    "NotIrreducible",
    "NotDivisible",
    "RankOverflow",
    "LocalModel",
    "local_model",
    "ContPoly",
    "cont_irreducible",
    "cont_recursive",
    "pushforward",
    "to_chern_form",
    "to_root_form",
    "contribution_table",
    "recursion_residual",
    "is_root_symmetric",
    "degree_check",
    "render_contribution",
    "cont_to_dict",
    "cont_from_dict",
    "box_tensor_chern",
    "half_edges",
    "graph_of_tree",
    "normal_bundle_chern",
    "substitute",
    "PullbackTerm",
    "codimension",
    "tautological_dimension_bound",
    "vanishing_predicate",
    "nontrivial_cases",
    "pullback_terms",
    "torelli_pullback",
]
