"""
Abstract base class for the computation config.

**ComputeConfigModel** defines the limits and execution settings shared by all computational
modules: genus and fold caps of the finite-dimensional rings, the box-tensor rank cap, the
worker count, the script dialect and the optional catalog cache directory.

Usage:
    Subclass it to provide storage and validation for each setting. Computational entry points
    accept any `ComputeConfigModel` and fall back to `ComputeConfig` when none is given.
"""

from abc import ABC, abstractmethod
from pathlib import Path


class ComputeConfigModel(ABC):
    """
    Abstract base class representing the computation config.

    Properties:
        lambda_max_genus (int): Genus cap for the tautological ring of A_g.
        inv_max_genus (int): Genus cap for the invariant ring.
        inv_max_folds (int): Fold cap for the invariant ring.
        rank_cap (int): Cap on r1 * r2 in box-tensor Chern expansions.
        threads (int): Number of worker processes.
        dialect (str): Script dialect.
        cache_dir (Path | None): Catalog cache directory.

    Methods:
        to_dict() -> dict: Converts the config to a dictionary.
    """

    @property
    @abstractmethod
    def lambda_max_genus(self) -> int:
        """
        Gets the genus cap of the tautological ring of A_g.

        Returns:
            int: Largest accepted genus.
        """

    @lambda_max_genus.setter
    @abstractmethod
    def lambda_max_genus(self, value: int) -> None:
        """
        Sets the genus cap of the tautological ring of A_g.

        Args:
            value (int): Largest accepted genus.
        """

    @property
    @abstractmethod
    def inv_max_genus(self) -> int:
        """
        Gets the genus cap of the invariant ring.

        Returns:
            int: Largest accepted genus.
        """

    @inv_max_genus.setter
    @abstractmethod
    def inv_max_genus(self, value: int) -> None:
        """
        Sets the genus cap of the invariant ring.

        Args:
            value (int): Largest accepted genus.
        """

    @property
    @abstractmethod
    def inv_max_folds(self) -> int:
        """
        Gets the fold cap of the invariant ring.

        Returns:
            int: Largest accepted fold count.
        """

    @inv_max_folds.setter
    @abstractmethod
    def inv_max_folds(self, value: int) -> None:
        """
        Sets the fold cap of the invariant ring.

        Args:
            value (int): Largest accepted fold count.
        """

    @property
    @abstractmethod
    def rank_cap(self) -> int:
        """
        Gets the box-tensor rank cap.

        Returns:
            int: Largest accepted r1 * r2.
        """

    @rank_cap.setter
    @abstractmethod
    def rank_cap(self, value: int) -> None:
        """
        Sets the box-tensor rank cap.

        Args:
            value (int): Largest accepted r1 * r2.
        """

    @property
    @abstractmethod
    def threads(self) -> int:
        """
        Gets the number of worker processes.

        Returns:
            int: Worker count.
        """

    @threads.setter
    @abstractmethod
    def threads(self, value: int) -> None:
        """
        Sets the number of worker processes.

        Args:
            value (int): Worker count.
        """

    @property
    @abstractmethod
    def dialect(self) -> str:
        """
        Gets the script dialect.

        Returns:
            str: Dialect name.
        """

    @dialect.setter
    @abstractmethod
    def dialect(self, value: str) -> None:
        """
        Sets the script dialect.

        Args:
            value (str): Dialect name.
        """

    @property
    @abstractmethod
    def cache_dir(self) -> Path | None:
        """
        Gets the catalog cache directory.

        Returns:
            Path | None: Directory or None if caching is disabled.
        """

    @cache_dir.setter
    @abstractmethod
    def cache_dir(self, value: str | Path | None) -> None:
        """
        Sets the catalog cache directory.

        Args:
            value (str | Path | None): Directory or None to disable caching.
        """

    @abstractmethod
    def to_dict(self) -> dict:
        """
        Converts the computation config to a dictionary.

        Returns:
            dict: A dictionary representation of the config.
        """
