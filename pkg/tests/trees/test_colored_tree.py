"""Test partitions, colored trees and their validation."""

import pytest

try:
    from src.scietex.torelli.trees import (
        InvalidPartition,
        InvalidTree,
        Partition,
        ColoredTree,
        critical_paths,
        covers_all_edges,
        is_stable,
        is_irreducible,
        dimension,
        validate_tree,
        is_extremal,
        tree_to_json,
        tree_from_json,
        make_tree,
    )
except ModuleNotFoundError:
    from scietex.torelli.trees import (
        InvalidPartition,
        InvalidTree,
        Partition,
        ColoredTree,
        critical_paths,
        covers_all_edges,
        is_stable,
        is_irreducible,
        dimension,
        validate_tree,
        is_extremal,
        tree_to_json,
        tree_from_json,
        make_tree,
    )


def test_partition() -> None:
    """
    Test partition parsing and invariants.
    """
    mu = Partition.parse("2,4")
    assert mu.parts == (2, 4)
    assert mu.total == 6
    assert mu.length == 2
    assert mu.codimension == 8
    assert str(mu) == "2,4"
    assert Partition((1, 1, 1)).codimension == 3
    with pytest.raises(InvalidPartition):
        Partition(())
    with pytest.raises(InvalidPartition):
        Partition((2, 0))
    with pytest.raises(InvalidPartition):
        Partition.parse("2,x")


def test_star_tree(star_tree, partition_24) -> None:
    """
    Test the structure of the genus-0 centered star.
    """
    assert star_tree.n_vertices == 4
    assert star_tree.n_edges == 3
    assert star_tree.valence(0) == 3
    assert star_tree.zero_vertices == (0,)
    assert star_tree.partition == partition_24
    assert not is_irreducible(star_tree)
    assert is_stable(star_tree)
    assert dimension(star_tree) == 12
    paths = critical_paths(star_tree)
    assert [(p.endpoints, p.edges) for p in paths] == [((1, 3), (0, 2)), ((2, 3), (1, 2))]
    assert covers_all_edges(star_tree)
    validate_tree(star_tree, partition_24)
    assert is_extremal(star_tree, partition_24)
    assert not is_extremal(star_tree, Partition((4, 2)))


def test_invalid_trees() -> None:
    """
    Test each violated condition is reported.
    """
    with pytest.raises(InvalidTree):
        # Same-colored neighbors leave an edge off every critical path.
        validate_tree(make_tree([(1, 1), (1, 1), (2, 2)], [(0, 1), (1, 2)]))
    with pytest.raises(InvalidTree):
        # A genus-0 vertex of valence 2 is unstable.
        validate_tree(make_tree([(1, 1), (0, None), (1, 2)], [(0, 1), (1, 2)]))
    with pytest.raises(InvalidTree):
        validate_tree(make_tree([(1, None), (1, 2)], [(0, 1)]))
    with pytest.raises(InvalidTree):
        validate_tree(make_tree([(1, 1), (1, 2), (1, 1)], [(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(InvalidTree):
        validate_tree(make_tree([(1, 1), (1, 2)], [(0, 0)]))
    with pytest.raises(InvalidTree):
        validate_tree(make_tree([(1, 1), (1, 2)], [(0, 1)]), Partition((1, 3)))


def test_single_vertex() -> None:
    """
    A lone positive-genus vertex is a stable tree.
    """
    t = ColoredTree((3,), (1,), ())
    assert is_stable(t)
    assert is_irreducible(t)
    assert dimension(t) == 6
    validate_tree(t, Partition((3,)))


def test_json(star_tree) -> None:
    """
    Test JSON serialization of trees.
    """
    text = tree_to_json(star_tree, "(0,0(1,1)(1,1)(4,2))")
    assert '"encoding":"(0,0(1,1)(1,1)(4,2))"' in text
    assert tree_from_json(text) == star_tree
    with pytest.raises(InvalidTree):
        tree_from_json('{"vertices": [{"genus": "x"}], "edges": []}')


if __name__ == "__main__":
    pytest.main()
