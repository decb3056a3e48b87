"""Exceptions of the tautological expression and script layer."""

from ..config.exceptions import TorelliError


class BadMatrix(TorelliError):
    """Abel-Jacobi matrix with a nonzero row sum or an invalid row selection."""


class UnsupportedDialect(TorelliError):
    """Script dialect that the emitter does not know."""


class UnknownConstant(TorelliError):
    """Constant name missing from the constants store."""


class OutOfRange(TorelliError):
    """Constant parameters outside the stored or valid range."""


class AmbientMismatch(TorelliError):
    """Tautological expressions living on different moduli spaces were combined."""
