"""Test the divisor-sum identities."""

from fractions import Fraction

import pytest

try:
    from src.scietex.torelli.emit import (
        sigma,
        hecke_factor,
        eisenstein_lhs,
        eisenstein_identity_check,
    )
except ModuleNotFoundError:
    from scietex.torelli.emit import (
        sigma,
        hecke_factor,
        eisenstein_lhs,
        eisenstein_identity_check,
    )


def test_sigma() -> None:
    """
    Test divisor power sums.
    """
    assert sigma(1, 6) == 12
    assert sigma(3, 2) == 9
    assert sigma(0, 12) == 6
    with pytest.raises(ValueError):
        sigma(1, 0)
    with pytest.raises(ValueError):
        sigma(-1, 3)


def test_hecke_factor() -> None:
    """
    Test the local factors.
    """
    assert hecke_factor(2, 1) == 1
    assert hecke_factor(2, 2) == 6
    assert hecke_factor(2, 4) == 48
    assert hecke_factor(3, 2) == Fraction(32 * 15, 16)


def test_lhs() -> None:
    """
    Small degrees by hand.
    """
    assert eisenstein_lhs(2, 1) == 1
    assert eisenstein_lhs(2, 2) == 9
    assert eisenstein_lhs(2, 4) == 73


@pytest.mark.timeout(60)
@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
def test_identity(g: int, logger_fixture) -> None:
    """
    The identity holds up to degree 50.
    """
    assert eisenstein_identity_check(g, 50, logger_fixture)


def test_identity_genus() -> None:
    """
    Genus below 2 is rejected.
    """
    with pytest.raises(ValueError):
        eisenstein_identity_check(1, 5)


if __name__ == "__main__":
    pytest.main()
