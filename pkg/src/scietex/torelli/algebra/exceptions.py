"""
Exceptions raised by the exact arithmetic layer.

Classes:
    - NotSymmetric: A polynomial expected to be symmetric in a set of roots is not.
    - NonUnit: Series inversion of a polynomial whose constant term is not 1.
    - NoSolution: Inconsistent linear system.
    - PolynomialSyntaxError: Text could not be parsed into a polynomial over the given variables.
"""

from ..config.exceptions import TorelliError


class NotSymmetric(TorelliError):
    """Polynomial is not invariant under permutations of the listed root variables."""


class NonUnit(TorelliError):
    """Constant term of a polynomial to invert is not equal to 1."""


class NoSolution(TorelliError):
    """Linear system has no solution."""


class PolynomialSyntaxError(TorelliError):
    """Polynomial text is malformed or uses unknown variables."""
