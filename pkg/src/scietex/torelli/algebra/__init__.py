"""
Exact arithmetic substrate.

Rationals are `fractions.Fraction`; multivariate polynomials are sympy `PolyElement` objects
over QQ in graded-lex order; matrices are sympy `DomainMatrix` objects over QQ.
"""

from .exceptions import NotSymmetric, NonUnit, NoSolution, PolynomialSyntaxError
from .polynomials import (
    Rational,
    MPoly,
    poly_ring,
    ring_names,
    gen,
    to_fraction,
    to_qq,
    constant,
    constant_term,
    coefficient,
    weighted_degree,
    degrees,
    is_homogeneous,
    graded_piece,
    truncate,
    series_inverse,
    substitute,
    parse_poly,
    format_rational,
    render,
)
from .symmetric import (
    is_symmetric,
    elementary_symmetric_rewrite,
    elementary_polynomials,
    power_sums_to_elementary,
    elementary_to_power_sums,
)
from .linear import (
    QMatrix,
    qmatrix,
    to_rows,
    rank,
    nullspace,
    is_nonsingular,
    LinearSolution,
    solve_linear,
)

__all__ = [
    "NotSymmetric",
    "NonUnit",
    "NoSolution",
    "PolynomialSyntaxError",
    "Rational",
    "MPoly",
    "poly_ring",
    "ring_names",
    "gen",
    "to_fraction",
    "to_qq",
    "constant",
    "constant_term",
    "coefficient",
    "weighted_degree",
    "degrees",
    "is_homogeneous",
    "graded_piece",
    "truncate",
    "series_inverse",
    "substitute",
    "parse_poly",
    "format_rational",
    "render",
    "is_symmetric",
    "elementary_symmetric_rewrite",
    "elementary_polynomials",
    "power_sums_to_elementary",
    "elementary_to_power_sums",
    "QMatrix",
    "qmatrix",
    "to_rows",
    "rank",
    "nullspace",
    "is_nonsingular",
    "LinearSolution",
    "solve_linear",
]
