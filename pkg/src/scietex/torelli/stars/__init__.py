"""
Wall-crossing data for the Torelli pullback of product loci with a factor of dimension r <= 2.

Enumerates the star graphs, expands the leg I-functions and stores the pushforwards of
exceptional monomials along the blowup models of the unramified spaces.

Classes:
    - StarGraph: Root with legs (g_i, mu^i).
    - IFunctionSeries: Retained part of an I-function.
    - StratumTerm: Decorated stratum in an exceptional pushforward.
    - ExceptionalClass: Sum of stratum terms.
    - BlowupComponent: Component of the blowup center.
    - WallcrossTerm: Symbolic contribution of a star graph.
"""

from .exceptions import UnsupportedR, InvalidStar, OutOfTable, MissingTable
from .star_graph import (
    StarGraph,
    validate_star,
    make_star,
    enumerate_stars,
    aut_order_star,
    star_to_dict,
    star_from_dict,
    star_to_json,
    star_from_json,
)
from .i_function import (
    IFunctionSeries,
    z_degree,
    aut_order_partition,
    series_names,
    series_ring,
    complete_homogeneous,
    numerator_coefficients,
    i_function,
)
from .exceptional import (
    StratumTerm,
    ExceptionalClass,
    BlowupComponent,
    exceptional_cases,
    case_for_markings,
    parse_exceptional_monomial,
    exceptional_pushforward,
    blowup_component_count,
    blowup_components,
)
from .assembly import WallcrossTerm, unramified_space, psi_substitution, wallcross_assemble

__all__ = [
    "UnsupportedR",
    "InvalidStar",
    "OutOfTable",
    "MissingTable",
    "StarGraph",
    "validate_star",
    "make_star",
    "enumerate_stars",
    "aut_order_star",
    "star_to_dict",
    "star_from_dict",
    "star_to_json",
    "star_from_json",
    "IFunctionSeries",
    "z_degree",
    "aut_order_partition",
    "series_names",
    "series_ring",
    "complete_homogeneous",
    "numerator_coefficients",
    "i_function",
    "StratumTerm",
    "ExceptionalClass",
    "BlowupComponent",
    "exceptional_cases",
    "case_for_markings",
    "parse_exceptional_monomial",
    "exceptional_pushforward",
    "blowup_component_count",
    "blowup_components",
    "WallcrossTerm",
    "unramified_space",
    "psi_substitution",
    "wallcross_assemble",
]
