"""Exceptions of the tautological ring of A_g."""

from ..config.exceptions import TorelliError


class DegreeOutOfRange(TorelliError):
    """Coordinates requested in a degree above the socle degree g(g-1)/2."""


class WrongDegree(TorelliError):
    """Class is not homogeneous of the required degree."""


class GenusCapExceeded(TorelliError):
    """Genus exceeds the configured cap of the ring construction."""
