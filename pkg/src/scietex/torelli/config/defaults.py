"""
Computation config defaults.

This module defines constants for default values and hard limits used across the package.
The caps keep exact linear algebra and enumeration within desk-scale sizes; every cap is
configurable through `ComputeConfig` and is never exceeded silently.

Constants:
    DEFAULT_LAMBDA_MAX_GENUS (int): Largest genus accepted by the tautological ring of A_g.
    DEFAULT_INV_MAX_GENUS (int): Largest genus accepted by the invariant ring I_{g,s}.
    DEFAULT_INV_MAX_FOLDS (int): Largest fold count s accepted by the invariant ring I_{g,s}.
    DEFAULT_RANK_CAP (int): Largest product of ranks r1 * r2 in box-tensor Chern expansions.
        49 covers every partition with g <= 8.
    DEFAULT_THREADS (int): Default number of worker processes. Equals available CPUs.
    DEFAULT_DIALECT (str): Default script dialect for the external tautological-ring
        calculator.
    DEFAULT_DIALECT_LIST (tuple[str, ...]): Supported script dialects.
    DEFAULT_JG_MAX_GENUS (int): Largest genus with a stored taut([J_g]) table.
    DEFAULT_BLOWUP_MAX_MARKINGS (int): Largest marking count with tabulated exceptional
        pushforwards.
    DEFAULT_CACHE_ENV (str): Environment variable naming the catalog cache directory.
    DEFAULT_LOG_LEVEL (str): Default CLI log level.
    DEFAULT_LOG_LEVEL_LIST (tuple[str, ...]): Accepted log levels.
"""

import os

# Tautological ring of A_g
DEFAULT_LAMBDA_MAX_GENUS: int = 12

# Invariant ring I_{g,s}
DEFAULT_INV_MAX_GENUS: int = 6
DEFAULT_INV_MAX_FOLDS: int = 4

# Box-tensor Chern classes
DEFAULT_RANK_CAP: int = 49

# Parallelism
DEFAULT_THREADS: int = os.cpu_count() or 1

# Script emission
DEFAULT_DIALECT: str = "v1"
DEFAULT_DIALECT_LIST: tuple[str, ...] = ("v1",)

# Stored tables
DEFAULT_JG_MAX_GENUS: int = 8
DEFAULT_BLOWUP_MAX_MARKINGS: int = 3

# Persistence
DEFAULT_CACHE_ENV: str = "TORELLI_CACHE_DIR"

# Logging
DEFAULT_LOG_LEVEL: str = "WARNING"
DEFAULT_LOG_LEVEL_LIST: tuple[str, ...] = (
    "DEBUG",
    "INFO",
    "WARNING",
    "ERROR",
    "CRITICAL",
)
