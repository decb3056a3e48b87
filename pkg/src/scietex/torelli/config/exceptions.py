"""
Module defining the base exceptions of the package.

Classes:
    - TorelliError: Base class of every domain error raised by the computational modules.
      The command line front end reports these with exit code 1.
    - TorelliConfigError: Raised when an invalid value is passed to the computation config.

Notes:
    - Both subclass `ValueError`, so callers that only care about bad input can catch that.
"""


class TorelliError(ValueError):
    """
    Base exception for domain errors.

    Subpackages derive their specific errors from this class.

    Attributes:
        message (str): Error message describing the issue.
    """


class TorelliConfigError(TorelliError):
    """
    Custom exception indicating invalid or unsupported values in the computation config.

    Attributes:
        message (str): Error message describing the issue.

    Raises:
        ValueError: When an invalid configuration parameter is detected.
    """
