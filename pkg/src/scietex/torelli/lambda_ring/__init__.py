"""
The tautological ring R*(A_g) as a finite-dimensional graded algebra.

Provides the graded basis with normal forms, socle evaluation, the lambda_g-pairing and its
pairing matrices.
"""

from .exceptions import DegreeOutOfRange, WrongDegree, GenusCapExceeded
from .ring import (
    LambdaPoly,
    LambdaBasis,
    lambda_names,
    lambda_ring,
    lambda_weights,
    socle_degree,
    gamma,
    build_ring,
    normal_form,
    socle_eval,
    ab_evaluate,
    pairing_matrix,
    parse_lambda,
    coefficient_of,
)

__all__ = [
    "DegreeOutOfRange",
    "WrongDegree",
    "GenusCapExceeded",
    "LambdaPoly",
    "LambdaBasis",
    "lambda_names",
    "lambda_ring",
    "lambda_weights",
    "socle_degree",
    "gamma",
    "build_ring",
    "normal_form",
    "socle_eval",
    "ab_evaluate",
    "pairing_matrix",
    "parse_lambda",
    "coefficient_of",
]
