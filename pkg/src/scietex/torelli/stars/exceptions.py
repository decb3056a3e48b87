"""Exceptions of the wall-crossing layer."""

from ..config.exceptions import TorelliError


class UnsupportedR(TorelliError):
    """Target dimension other than 1 or 2."""


class InvalidStar(TorelliError):
    """Star graph data violates the genus constraint or the leg shape rules."""


class OutOfTable(TorelliError):
    """Exceptional monomial outside the tabulated range."""


class MissingTable(TorelliError):
    """No exceptional pushforward table is stored for the required marking count."""
