"""Fixtures for testing."""

from logging import getLogger

import pytest

try:
    from src.scietex.torelli.config import ComputeConfig
    from src.scietex.torelli.trees import Partition, make_tree
except ModuleNotFoundError:
    from scietex.torelli.config import ComputeConfig
    from scietex.torelli.trees import Partition, make_tree


# pylint: disable=redefined-outer-name


@pytest.fixture
def logger_fixture():
    """Set up the test environment."""
    logger = getLogger()
    logger.setLevel("DEBUG")
    yield logger


@pytest.fixture
def serial_config():
    """Single-process computation config."""
    return ComputeConfig(threads=1)


@pytest.fixture
def partition_24():
    """Partition (2, 4) of genus 6."""
    return Partition((2, 4))


@pytest.fixture
def star_tree():
    """
    Genus-0 center joined to two genus-1 vertices of the first color and a genus-4 vertex of
    the second color. Edges 1, 2 go to the first color, edge 3 to the second.
    """
    return make_tree([(0, None), (1, 1), (1, 1), (4, 2)], [(0, 1), (0, 2), (0, 3)])
