"""Test the assembly of wall-crossing terms."""

from fractions import Fraction

import pytest

try:
    from src.scietex.torelli.stars import (
        UnsupportedR,
        MissingTable,
        make_star,
        unramified_space,
        psi_substitution,
        wallcross_assemble,
    )
except ModuleNotFoundError:
    from scietex.torelli.stars import (
        UnsupportedR,
        MissingTable,
        make_star,
        unramified_space,
        psi_substitution,
        wallcross_assemble,
    )


def test_unramified_spaces() -> None:
    """
    Test naming of the blowup models.
    """
    assert unramified_space(make_star(2, 2, [(1, (1,)), (1, (1,))])) == "M~_{2,2}"
    assert unramified_space(make_star(2, 1, [(1, (1, 1)), (1, (1,))])) == "M~._{1,2+1}"
    assert unramified_space(make_star(1, 1, [(2, (1,))])) == "M^un_{1,1}(E)"


def test_substitutions() -> None:
    """
    Test the rewriting rules for each root type.
    """
    assert psi_substitution(make_star(1, 1, [(1, (1,)), (1, (1,))])) == {
        "Psi1": "psi1",
        "Psi2": "psi2",
    }
    exceptional = psi_substitution(make_star(2, 2, [(2, (1,))]))
    assert exceptional["Psi1"] == "psi1 - eps1^*psi1 + E1"
    assert exceptional["H1"] == "eps1^*psi1 - E1"
    assert exceptional["a2"] == "a2"
    elliptic = psi_substitution(make_star(2, 1, [(1, (1, 1)), (1, (1,))]))
    assert elliptic["Psi1"] == "psi_p1 + psi_p2 - E"
    assert elliptic["Psi2"] == "psi1"
    assert elliptic["H2"] == "0"
    assert elliptic["a1"] == "0"


@pytest.mark.timeout(30)
def test_assemble_r2(logger_fixture) -> None:
    """
    Genus 4 surface targets give four stars.
    """
    terms = wallcross_assemble(4, 2, logger_fixture)
    assert [t.space for t in terms] == ["M~_{2,1}", "M~_{2,2}", "M~._{1,2+0}", "M~._{1,2+1}"]
    assert [t.coefficient for t in terms] == [1, Fraction(1, 2), 1, 1]
    assert [t.exceptional_case for t in terms] == ["M21", "M22", None, None]
    assert [len(t.legs) for t in terms] == [1, 2, 1, 2]
    assert terms[0].legs[0].z_degree == 3


@pytest.mark.timeout(30)
def test_assemble_r1() -> None:
    """
    Genus 3 curve targets give two stars without exceptional tables.
    """
    terms = wallcross_assemble(3, 1)
    assert [str(t.star) for t in terms] == ["[g0=1; (2,(1,))]", "[g0=1; (1,(1,)), (1,(1,))]"]
    assert [t.coefficient for t in terms] == [1, Fraction(1, 2)]
    assert all(t.exceptional_case is None for t in terms)
    assert terms[1].substitutions == {"Psi1": "psi1", "Psi2": "psi2"}


def test_assemble_errors() -> None:
    """
    Test unsupported dimensions and missing tables.
    """
    with pytest.raises(UnsupportedR):
        wallcross_assemble(4, 3)
    with pytest.raises(MissingTable):
        wallcross_assemble(6, 2)


if __name__ == "__main__":
    pytest.main()
