"""Exceptions of the invariant ring layer."""

from ..config.exceptions import TorelliError


class SingularSystem(TorelliError):
    """Linear system for a projection is singular or inconsistent."""


class MonomialSyntaxError(TorelliError):
    """Monomial text outside the t<i> / e<i><j> grammar."""


class InvariantCapExceeded(TorelliError):
    """Genus or fold count above the configured caps of the invariant ring."""
