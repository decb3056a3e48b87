"""Test canonical encodings and canonical forms."""

import pytest

try:
    from src.scietex.torelli.trees import (
        make_tree,
        centroids,
        canonical_encode,
        encoding_text,
        canonical_form,
        edge_labels,
    )
except ModuleNotFoundError:
    from scietex.torelli.trees import (
        make_tree,
        centroids,
        canonical_encode,
        encoding_text,
        canonical_form,
        edge_labels,
    )


def test_star_encoding(star_tree) -> None:
    """
    The star encodes from its genus-0 center.
    """
    assert centroids(star_tree) == [0]
    assert canonical_encode(star_tree) == b"(0,0(1,1)(1,1)(4,2))"
    assert edge_labels(star_tree) == ["z1", "z2", "z3"]


def test_relabeling_invariance(star_tree) -> None:
    """
    Relabeled copies share the encoding and the canonical form.
    """
    shuffled = make_tree([(4, 2), (1, 1), (0, None), (1, 1)], [(2, 3), (0, 2), (1, 2)])
    assert encoding_text(shuffled) == encoding_text(star_tree)
    assert canonical_form(shuffled) == canonical_form(star_tree)
    other = make_tree([(0, None), (1, 1), (2, 1), (3, 2)], [(0, 1), (0, 2), (0, 3)])
    assert encoding_text(other) != encoding_text(star_tree)


def test_two_centroids() -> None:
    """
    A two-vertex tree has two centroids and picks the smaller encoding.
    """
    t = make_tree([(2, 2), (1, 1)], [(0, 1)])
    assert centroids(t) == [0, 1]
    assert encoding_text(t) == "(1,1(2,2))"
    form = canonical_form(t)
    assert form.genera == (1, 2)
    assert form.colors == (1, 2)


def test_canonical_form_is_fixed(star_tree) -> None:
    """
    The canonical form is its own canonical form.
    """
    form = canonical_form(star_tree)
    assert canonical_form(form) == form
    assert form.genera[0] == 0


if __name__ == "__main__":
    pytest.main()
