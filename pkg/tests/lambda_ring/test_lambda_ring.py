"""Test the tautological ring of A_g."""

from fractions import Fraction

import pytest

try:
    from src.scietex.torelli.config import ComputeConfig
    from src.scietex.torelli.algebra import is_nonsingular
    from src.scietex.torelli.lambda_ring import (
        DegreeOutOfRange,
        GenusCapExceeded,
        WrongDegree,
        LambdaPoly,
        socle_degree,
        gamma,
        build_ring,
        normal_form,
        socle_eval,
        ab_evaluate,
        pairing_matrix,
        parse_lambda,
        coefficient_of,
    )
except ModuleNotFoundError:
    from scietex.torelli.config import ComputeConfig
    from scietex.torelli.algebra import is_nonsingular
    from scietex.torelli.lambda_ring import (
        DegreeOutOfRange,
        GenusCapExceeded,
        WrongDegree,
        LambdaPoly,
        socle_degree,
        gamma,
        build_ring,
        normal_form,
        socle_eval,
        ab_evaluate,
        pairing_matrix,
        parse_lambda,
        coefficient_of,
    )


def test_gamma() -> None:
    """
    Test the socle constants.
    """
    assert gamma(1) == Fraction(1, 24)
    assert gamma(2) == Fraction(1, 5760)
    assert gamma(3) == Fraction(1, 2903040)


def test_dimensions() -> None:
    """
    Graded dimensions count subsets of {1, ..., g-1} by their sum.
    """
    assert build_ring(1).dims() == [1]
    assert build_ring(2).dims() == [1, 1]
    assert build_ring(3).dims() == [1, 1, 1, 1]
    assert build_ring(4).dims() == [1, 1, 1, 2, 1, 1, 1]
    for g in range(1, 6):
        basis = build_ring(g)
        assert basis.total_dimension() == 2 ** (g - 1)
        assert len(basis.dims()) == socle_degree(g) + 1


def test_socle_integral() -> None:
    """
    The socle monomial pairs with lambda_g to gamma_g.
    """
    for g in range(1, 6):
        basis = build_ring(g)
        top = basis.socle_monomial()
        assert socle_eval(top, basis) == 1
        assert ab_evaluate(top) == gamma(g)


def test_relations() -> None:
    """
    Test the Mumford relation lambda_1^2 = 2 lambda_2 and the vanishing of lambda_g.
    """
    basis = build_ring(3)
    assert not basis.reduce(parse_lambda("l1^2 - 2*l2", 3))
    assert basis.reduce(parse_lambda("l1^2", 3)) == LambdaPoly.lam(3, 2) * 2
    assert not basis.reduce(LambdaPoly.lam(3, 3))
    assert ab_evaluate(parse_lambda("l1^3", 3)) == 2 * gamma(3)
    # Parts above the socle degree vanish.
    assert not basis.reduce(parse_lambda("l1^4", 3))


def test_normal_form() -> None:
    """
    Test coordinates per degree.
    """
    basis = build_ring(3)
    x = parse_lambda("1 + 3*l1 + l1^2", 3)
    assert normal_form(x, basis) == {
        0: [Fraction(1)],
        1: [Fraction(3)],
        2: [Fraction(2)],
    }
    assert coefficient_of(x, (1, 0, 0)) == 3
    with pytest.raises(DegreeOutOfRange):
        normal_form(parse_lambda("1 + l1^5", 3), basis)
    assert normal_form(basis.reduce(parse_lambda("1 + l1^5", 3)), basis) == {0: [Fraction(1)]}


def test_pairing_nonsingular() -> None:
    """
    The pairing into the socle is perfect.
    """
    for g in (2, 3, 4):
        basis = build_ring(g)
        for k in range(socle_degree(g) + 1):
            assert is_nonsingular(pairing_matrix(basis, k))


def test_errors() -> None:
    """
    Test degree and cap errors.
    """
    basis = build_ring(3)
    with pytest.raises(WrongDegree):
        socle_eval(LambdaPoly.lam(3, 1), basis)
    with pytest.raises(DegreeOutOfRange):
        basis.coordinates(LambdaPoly.lam(3, 1).expression, 4)
    with pytest.raises(DegreeOutOfRange):
        pairing_matrix(basis, 5)
    with pytest.raises(GenusCapExceeded):
        build_ring(3, config=ComputeConfig(lambda_max_genus=2))
    with pytest.raises(ValueError):
        build_ring(0)


def test_lambda_poly() -> None:
    """
    Test class arithmetic.
    """
    assert not LambdaPoly.lam(2, 3)
    assert LambdaPoly.lam(2, 0) == LambdaPoly.from_monomial(2, (0, 0))
    x = LambdaPoly.lam(2, 1) + LambdaPoly.lam(2, 2) * 2
    assert str(x) == "l1 + 2*l2"
    assert x.degrees() == {1, 2}
    assert not LambdaPoly.from_monomial(2, (1, 0), 0)


if __name__ == "__main__":
    pytest.main()
