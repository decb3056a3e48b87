"""Test star graph enumeration and validation."""

import logging

import pytest

try:
    from src.scietex.torelli.stars import (
        UnsupportedR,
        InvalidStar,
        StarGraph,
        validate_star,
        make_star,
        enumerate_stars,
        aut_order_star,
        star_to_json,
        star_from_json,
    )
except ModuleNotFoundError:
    from scietex.torelli.stars import (
        UnsupportedR,
        InvalidStar,
        StarGraph,
        validate_star,
        make_star,
        enumerate_stars,
        aut_order_star,
        star_to_json,
        star_from_json,
    )


def test_counts() -> None:
    """
    Test catalog sizes.
    """
    assert len(enumerate_stars(2, 1)) == 1
    assert len(enumerate_stars(3, 1)) == 2
    assert len(enumerate_stars(4, 2)) == 4
    assert len(enumerate_stars(5, 2)) == 6


def test_order_r2() -> None:
    """
    Genus-2 roots come first, then fewer legs.
    """
    assert [str(s) for s in enumerate_stars(4, 2)] == [
        "[g0=2; (2,(1,))]",
        "[g0=2; (1,(1,)), (1,(1,))]",
        "[g0=1; (2,(1, 1))]",
        "[g0=1; (1,(1, 1)), (1,(1,))]",
    ]


def test_left_out_stars_are_logged(caplog) -> None:
    """
    Genus-1 roots with a higher-genus single leg are reported.
    """
    with caplog.at_level(logging.WARNING):
        stars = enumerate_stars(5, 2)
    assert "not in the r = 2 catalog" in caplog.text
    assert all(s.genus == 5 for s in stars)


def test_star_properties() -> None:
    """
    Test genus, markings and automorphisms.
    """
    star = make_star(2, 1, [(1, (1,)), (3, (1, 1))])
    assert star.legs == ((3, (1, 1)), (1, (1,)))
    assert star.genus == 6
    assert star.n_root_markings == 3
    assert not star.is_exceptional
    assert aut_order_star(star) == 1
    assert aut_order_star(make_star(1, 1, [(1, (1,)), (1, (1,)), (2, (1,))])) == 2
    assert make_star(2, 2, [(2, (1,))]).is_exceptional


def test_validation() -> None:
    """
    Test the shape rules.
    """
    with pytest.raises(UnsupportedR):
        validate_star(make_star(3, 1, [(1, (1,))]))
    with pytest.raises(InvalidStar):
        validate_star(make_star(1, 2, [(1, (1,))]))
    with pytest.raises(InvalidStar):
        validate_star(make_star(2, 2, [(1, (1, 1))]))
    with pytest.raises(InvalidStar):
        validate_star(make_star(2, 1, [(1, (1,))]))
    with pytest.raises(InvalidStar):
        validate_star(make_star(2, 1, [(1, (1, 1)), (2, (1,))]))
    with pytest.raises(InvalidStar):
        validate_star(StarGraph(1, 1, ((1, (1,)), (2, (1,)))))
    with pytest.raises(InvalidStar):
        validate_star(make_star(1, 1, [(2, (1,))]), g=5)
    with pytest.raises(InvalidStar):
        validate_star(make_star(1, 1, []))


def test_enumeration_errors() -> None:
    """
    Test unsupported dimensions and too small genera.
    """
    with pytest.raises(UnsupportedR):
        enumerate_stars(5, 3)
    with pytest.raises(ValueError):
        enumerate_stars(2, 2)


def test_json() -> None:
    """
    Stars survive their JSON form.
    """
    star = make_star(2, 1, [(1, (1,)), (2, (1, 1))])
    assert star_from_json(star_to_json(star)) == star
    with pytest.raises(InvalidStar):
        star_from_json('{"r": 1, "g0": 1}')


if __name__ == "__main__":
    pytest.main()
