"""
Computation config validation routines.

This module provides utility functions for validating the parameters of the computation config.
Each function checks whether the given parameter meets its criteria and raises
`TorelliConfigError` if validation fails. `None` always means "use the default".

Functions:
    - validate_positive_int(value, default, name): Validates a positive integer limit.
    - validate_lambda_max_genus(value): Validates the tautological ring genus cap.
    - validate_inv_max_genus(value): Validates the invariant ring genus cap.
    - validate_inv_max_folds(value): Validates the invariant ring fold cap.
    - validate_rank_cap(value): Validates the box-tensor rank cap.
    - validate_threads(value): Validates the worker count.
    - validate_dialect(value): Validates the script dialect.
    - validate_cache_dir(value): Validates the catalog cache directory.
    - validate_log_level(value): Validates the CLI log level.

Raises:
    TorelliConfigError: If any of the parameters fail validation.
"""

from pathlib import Path

from .exceptions import TorelliConfigError
from .defaults import (
    DEFAULT_LAMBDA_MAX_GENUS,
    DEFAULT_INV_MAX_GENUS,
    DEFAULT_INV_MAX_FOLDS,
    DEFAULT_RANK_CAP,
    DEFAULT_THREADS,
    DEFAULT_DIALECT,
    DEFAULT_DIALECT_LIST,
    DEFAULT_LOG_LEVEL,
    DEFAULT_LOG_LEVEL_LIST,
)


def validate_positive_int(value: int | None, default: int, name: str) -> int:
    """
    Validate a positive integer parameter.

    Args:
        value (int | None): Value to validate.
        default (int): Value returned for None.
        name (str): Parameter name used in error messages.

    Raises:
        TorelliConfigError: If the value is not a positive integer.

    Returns:
        int: Validated value.
    """
    if value is None:
        return default
    if isinstance(value, bool) or not isinstance(value, int):
        raise TorelliConfigError(f"{name} must be integer number, got {type(value)}")
    if value < 1:
        raise TorelliConfigError(f"{name} must be positive, got {value}")
    return value


def validate_lambda_max_genus(value: int | None) -> int:
    """
    Validate the genus cap of the tautological ring of A_g.

    Args:
        value (int | None): Genus cap.

    Returns:
        int: Validated genus cap.
    """
    return validate_positive_int(value, DEFAULT_LAMBDA_MAX_GENUS, "Lambda ring genus cap")


def validate_inv_max_genus(value: int | None) -> int:
    """
    Validate the genus cap of the invariant ring.

    Args:
        value (int | None): Genus cap.

    Returns:
        int: Validated genus cap.
    """
    return validate_positive_int(value, DEFAULT_INV_MAX_GENUS, "Invariant ring genus cap")


def validate_inv_max_folds(value: int | None) -> int:
    """
    Validate the fold-count cap of the invariant ring.

    Args:
        value (int | None): Fold cap.

    Returns:
        int: Validated fold cap.
    """
    folds = validate_positive_int(value, DEFAULT_INV_MAX_FOLDS, "Invariant ring fold cap")
    if folds > 9:
        # monomial grammar e<i><j> uses single digits
        raise TorelliConfigError(f"Invariant ring fold cap must not exceed 9, got {folds}")
    return folds


def validate_rank_cap(value: int | None) -> int:
    """
    Validate the box-tensor rank cap.

    Args:
        value (int | None): Largest accepted r1 * r2.

    Returns:
        int: Validated rank cap.
    """
    return validate_positive_int(value, DEFAULT_RANK_CAP, "Rank cap")


def validate_threads(value: int | None) -> int:
    """
    Validate the worker count.

    Args:
        value (int | None): Number of worker processes.

    Returns:
        int: Validated worker count.
    """
    return validate_positive_int(value, DEFAULT_THREADS, "Threads")


def validate_dialect(value: str | None) -> str:
    """
    Validate the script dialect.

    Args:
        value (str | None): Dialect name.

    Raises:
        TorelliConfigError: If the dialect is not supported.

    Returns:
        str: Validated dialect.
    """
    if value is None:
        return DEFAULT_DIALECT
    if not isinstance(value, str):
        raise TorelliConfigError(f"Dialect must be a string, got {type(value)}")
    if value not in DEFAULT_DIALECT_LIST:
        raise TorelliConfigError(f"Invalid dialect: {value}")
    return value


def validate_cache_dir(value: str | Path | None) -> Path | None:
    """
    Validate the catalog cache directory.

    Args:
        value (str | Path | None): Directory path or None to disable caching.

    Raises:
        TorelliConfigError: If the path exists and is not a directory.

    Returns:
        Path | None: Validated directory path.
    """
    if value is None or value == "":
        return None
    if not isinstance(value, (str, Path)):
        raise TorelliConfigError(f"Cache dir must be a path, got {type(value)}")
    path = Path(value)
    if path.exists() and not path.is_dir():
        raise TorelliConfigError(f"Cache dir is not a directory: {path}")
    return path


def validate_log_level(value: str | None) -> str:
    """
    Validate the log level name.

    Args:
        value (str | None): Log level name, case-insensitive.

    Returns:
        str: Validated upper-case log level.
    """
    if value is None:
        return DEFAULT_LOG_LEVEL
    if not isinstance(value, str):
        raise TorelliConfigError(f"Log level must be a string, got {type(value)}")
    if value.upper() not in DEFAULT_LOG_LEVEL_LIST:
        raise TorelliConfigError(f"Invalid log level: {value}")
    return value.upper()
