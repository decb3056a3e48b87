"""Exceptions of the colored tree layer."""

from ..config.exceptions import TorelliError


class InvalidPartition(TorelliError):
    """Partition with no parts or with a non-positive part."""


class InvalidTree(TorelliError):
    """Tree data violates the colored extremal tree conditions."""
