"""
Implementation of the computation config interface.

Example Usage:
>>> from scietex.torelli.config import ComputeConfig
>>> config = ComputeConfig(threads=1, rank_cap=16)
>>> config.to_dict()["rank_cap"]
16
"""

import os
from pathlib import Path

from .compute_config_interface import ComputeConfigModel
from .defaults import DEFAULT_CACHE_ENV
from .validation import (
    validate_lambda_max_genus,
    validate_inv_max_genus,
    validate_inv_max_folds,
    validate_rank_cap,
    validate_threads,
    validate_dialect,
    validate_cache_dir,
)


class ComputeConfig(ComputeConfigModel):
    """
    Computation config with validated settings.

    Every setting accepts None, meaning the package default from `defaults.py`.
    """

    # pylint: disable=too-many-arguments, too-many-positional-arguments
    def __init__(
        self,
        lambda_max_genus: int | None = None,
        inv_max_genus: int | None = None,
        inv_max_folds: int | None = None,
        rank_cap: int | None = None,
        threads: int | None = None,
        dialect: str | None = None,
        cache_dir: str | Path | None = None,
    ) -> None:
        self._lambda_max_genus = validate_lambda_max_genus(lambda_max_genus)
        self._inv_max_genus = validate_inv_max_genus(inv_max_genus)
        self._inv_max_folds = validate_inv_max_folds(inv_max_folds)
        self._rank_cap = validate_rank_cap(rank_cap)
        self._threads = validate_threads(threads)
        self._dialect = validate_dialect(dialect)
        self._cache_dir = validate_cache_dir(cache_dir)

    @classmethod
    def from_env(cls, **kwargs) -> "ComputeConfig":
        """
        Build a config taking the cache directory from the environment.

        Args:
            **kwargs: Other settings passed to the constructor.

        Returns:
            ComputeConfig: Config with `cache_dir` read from TORELLI_CACHE_DIR when not given.
        """
        if kwargs.get("cache_dir") is None:
            kwargs["cache_dir"] = os.environ.get(DEFAULT_CACHE_ENV)
        return cls(**kwargs)

    @property
    def lambda_max_genus(self) -> int:
        return self._lambda_max_genus

    @lambda_max_genus.setter
    def lambda_max_genus(self, value: int) -> None:
        self._lambda_max_genus = validate_lambda_max_genus(value)

    @property
    def inv_max_genus(self) -> int:
        return self._inv_max_genus

    @inv_max_genus.setter
    def inv_max_genus(self, value: int) -> None:
        self._inv_max_genus = validate_inv_max_genus(value)

    @property
    def inv_max_folds(self) -> int:
        return self._inv_max_folds

    @inv_max_folds.setter
    def inv_max_folds(self, value: int) -> None:
        self._inv_max_folds = validate_inv_max_folds(value)

    @property
    def rank_cap(self) -> int:
        return self._rank_cap

    @rank_cap.setter
    def rank_cap(self, value: int) -> None:
        self._rank_cap = validate_rank_cap(value)

    @property
    def threads(self) -> int:
        """
        Number of worker processes used by enumeration and contribution fan-out.

        Returns:
            int: Worker count; 1 means everything runs in the calling process.
        """
        return self._threads

    @threads.setter
    def threads(self, value: int) -> None:
        self._threads = validate_threads(value)

    @property
    def dialect(self) -> str:
        return self._dialect

    @dialect.setter
    def dialect(self, value: str) -> None:
        self._dialect = validate_dialect(value)

    @property
    def cache_dir(self) -> Path | None:
        return self._cache_dir

    @cache_dir.setter
    def cache_dir(self, value: str | Path | None) -> None:
        self._cache_dir = validate_cache_dir(value)

    def to_dict(self) -> dict:
        """
        Converts the computation config to a dictionary.

        Returns:
            dict: A dictionary representation of the config.
        """
        return {
            "lambda_max_genus": self.lambda_max_genus,
            "inv_max_genus": self.inv_max_genus,
            "inv_max_folds": self.inv_max_folds,
            "rank_cap": self.rank_cap,
            "threads": self.threads,
            "dialect": self.dialect,
            "cache_dir": str(self.cache_dir) if self.cache_dir is not None else None,
        }


def resolve_config(config: ComputeConfigModel | None) -> ComputeConfigModel:
    """
    Return the given config or a default one.

    Args:
        config (ComputeConfigModel | None): Config supplied by the caller.

    Returns:
        ComputeConfigModel: Usable config.
    """
    return config if isinstance(config, ComputeConfigModel) else ComputeConfig()
