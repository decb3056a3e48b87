"""Test enumeration of colored extremal trees and the catalog cache."""

import json

import pytest

try:
    from src.scietex.torelli.config import ComputeConfig
    from src.scietex.torelli.trees import (
        Partition,
        enumerate_trees,
        vertex_count_bound,
        is_extremal,
        encoding_text,
        catalog_path,
        load_catalog,
        save_catalog,
        cached_trees,
    )
except ModuleNotFoundError:
    from scietex.torelli.config import ComputeConfig
    from scietex.torelli.trees import (
        Partition,
        enumerate_trees,
        vertex_count_bound,
        is_extremal,
        encoding_text,
        catalog_path,
        load_catalog,
        save_catalog,
        cached_trees,
    )


def test_single_part() -> None:
    """
    A one-part partition has the lone vertex only.
    """
    trees = enumerate_trees(Partition((5,)))
    assert len(trees) == 1
    assert trees[0].genera == (5,)


def test_bound() -> None:
    """
    Test the vertex count bound.
    """
    assert vertex_count_bound(Partition((1, 2))) == 3
    assert vertex_count_bound(Partition((2, 2))) == 5
    assert vertex_count_bound(Partition((2, 4)), max_edges=3) == 4


def test_partition_12(serial_config) -> None:
    """
    (1, 2) has the single edge and the chain of three genus-1 vertices.
    """
    trees = enumerate_trees(Partition((1, 2)), config=serial_config)
    assert [encoding_text(t) for t in trees] == ["(1,1(2,2))", "(1,1(1,2)(1,2))"]


@pytest.mark.timeout(120)
def test_partition_22(serial_config) -> None:
    """
    Test the tree count of (2, 2) and the properties of every tree.
    """
    mu = Partition((2, 2))
    trees = enumerate_trees(mu, config=serial_config)
    assert len(trees) == 9
    encodings = [encoding_text(t) for t in trees]
    assert len(set(encodings)) == len(encodings)
    for t in trees:
        assert is_extremal(t, mu)
        assert t.n_edges <= mu.codimension
    assert [t.n_vertices for t in trees] == sorted(t.n_vertices for t in trees)


def test_catalog_round_trip(tmp_path, logger_fixture) -> None:
    """
    Catalogs are written on the first call and read back on the second.
    """
    mu = Partition((1, 2))
    config = ComputeConfig(threads=1, cache_dir=tmp_path)
    path = catalog_path(mu, tmp_path)
    assert path.name.startswith("trees-1_2-v")
    assert load_catalog(path, logger_fixture) is None
    first = cached_trees(mu, config, logger_fixture)
    assert path.is_file()
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["partition"] == [1, 2]
    assert [item["encoding"] for item in data["trees"]] == [encoding_text(t) for t in first]
    assert load_catalog(path, logger_fixture) == first
    assert cached_trees(mu, config, logger_fixture) == first


def test_catalog_rejects(tmp_path, logger_fixture) -> None:
    """
    Outdated and unreadable catalogs are ignored.
    """
    mu = Partition((1, 2))
    path = catalog_path(mu, tmp_path)
    trees = enumerate_trees(mu, config=ComputeConfig(threads=1))
    save_catalog(path, mu, trees, logger_fixture)
    data = json.loads(path.read_text(encoding="utf-8"))
    data["version"] = "0.0.0-old"
    path.write_text(json.dumps(data), encoding="utf-8")
    assert load_catalog(path, logger_fixture) is None
    path.write_text("{", encoding="utf-8")
    assert load_catalog(path, logger_fixture) is None


if __name__ == "__main__":
    pytest.main()
