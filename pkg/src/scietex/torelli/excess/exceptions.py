"""Exceptions of the excess intersection layer."""

from ..config.exceptions import TorelliError


class NotIrreducible(TorelliError):
    """Closed-form contribution requested for a tree with a genus-0 vertex."""


class NotDivisible(TorelliError):
    """Right-hand side of the contribution recursion is not divisible by the edge monomial."""


class RankOverflow(TorelliError):
    """Box-tensor Chern expansion beyond the configured rank cap."""
