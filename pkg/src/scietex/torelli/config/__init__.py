"""
Computation config of the package.

This subpackage provides the base exception classes, default limits, validation routines and
the `ComputeConfig` settings object shared by all computational modules.

Raises:
    TorelliConfigError: If invalid configuration parameters are detected.

Classes:
    - TorelliError: Base class of all domain errors.
    - TorelliConfigError: Invalid configuration values.
    - ComputeConfigModel: Abstract computation config.
    - ComputeConfig: Concrete computation config.
"""

from .exceptions import TorelliError, TorelliConfigError
from .compute_config_interface import ComputeConfigModel
from .compute_config_implementation import ComputeConfig, resolve_config

__all__ = [
    "TorelliError",
    "TorelliConfigError",
    "ComputeConfigModel",
    "ComputeConfig",
    "resolve_config",
]
