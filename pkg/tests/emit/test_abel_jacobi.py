"""Test the Abel-Jacobi pullbacks of theta and eta."""

from fractions import Fraction

import pytest

try:
    from src.scietex.torelli.invariants import InvClass
    from src.scietex.torelli.lambda_ring import WrongDegree
    from src.scietex.torelli.emit import (
        BadMatrix,
        theta_pullback,
        theta_matrix_pullback,
        eta_pullback,
        b_matrix,
        z_matrix,
        pullback_class,
        zero_section_pullback,
        pr_pullback,
        delta_class,
        pr_prefactor,
        lambda_product,
        OutOfRange,
        DecoratedGraphTerm,
        StableTree,
        TautExpr,
    )
except ModuleNotFoundError:
    from scietex.torelli.invariants import InvClass
    from scietex.torelli.lambda_ring import WrongDegree
    from scietex.torelli.emit import (
        BadMatrix,
        theta_pullback,
        theta_matrix_pullback,
        eta_pullback,
        b_matrix,
        z_matrix,
        pullback_class,
        zero_section_pullback,
        pr_pullback,
        delta_class,
        pr_prefactor,
        lambda_product,
        OutOfRange,
        DecoratedGraphTerm,
        StableTree,
        TautExpr,
    )


def test_matrices() -> None:
    """
    Test the classical and the pointed Abel-Jacobi matrices.
    """
    assert b_matrix(2) == [[1, -1, 0, 0], [0, 0, 1, -1]]
    assert z_matrix(2) == [[-1, 1, 0], [-1, 0, 1]]
    assert all(sum(row) == 0 for row in b_matrix(3) + z_matrix(3))


def test_theta_genus_one() -> None:
    """
    On M_{1,2}^ct no stable divisor has a nonzero weight.
    """
    x = theta_pullback([1, -1], 1)
    assert [(t.coefficient, t.decoration) for t in x.terms] == [
        (Fraction(1, 2), (("psi1", 1),)),
        (Fraction(1, 2), (("psi2", 1),)),
    ]


def test_theta_genus_two() -> None:
    """
    Both separating divisors enter with weight -1/4.
    """
    x = theta_pullback([1, -1], 2)
    assert len(x) == 4
    assert x.degrees() == {1}
    divisors = [t for t in x.terms if t.graph.edges]
    assert [t.graph.legs for t in divisors] == [((1, 3), (2, 4)), ((2, 3), (1, 4))]
    assert all(t.coefficient == Fraction(-1, 4) for t in divisors)
    with pytest.raises(BadMatrix):
        theta_pullback([], 2)


def test_eta() -> None:
    """
    eta_{ij} is symmetric and of degree one.
    """
    a = b_matrix(2)
    eta = eta_pullback(a, 1, 2, 2)
    assert eta == eta_pullback(a, 2, 1, 2)
    assert not eta.is_zero()
    assert eta.degrees() == {1}
    with pytest.raises(BadMatrix):
        eta_pullback(a, 1, 1, 2)
    with pytest.raises(BadMatrix):
        eta_pullback(a, 1, 3, 2)


def test_bad_matrices() -> None:
    """
    Rows must sum to zero and share one length.
    """
    with pytest.raises(BadMatrix):
        theta_matrix_pullback([[1, 1]], 1, 2)
    with pytest.raises(BadMatrix):
        theta_matrix_pullback([[1, -1], [1, 0, -1]], 1, 2)
    with pytest.raises(BadMatrix):
        theta_matrix_pullback([], 1, 2)
    with pytest.raises(BadMatrix):
        theta_matrix_pullback(b_matrix(1), 2, 2)


def test_pullback_class() -> None:
    """
    theta_1 pulls back to the theta pullback of the first row.
    """
    a = b_matrix(1)
    assert pullback_class(InvClass.generator(2, 1, 1, 1), a) == theta_matrix_pullback(a, 1, 2)
    with pytest.raises(BadMatrix):
        pullback_class(InvClass.generator(2, 2, 1, 2), a)
    with pytest.raises(WrongDegree):
        pullback_class(InvClass.from_monomial(2, 1, (2,)), a)


def test_zero_section_genus_one() -> None:
    """
    On M_{1,2}^ct the pullback of the zero section along O(p1 - p2) is
    (psi1 + psi2) / 2 - lambda_1, the diagonal divisor.
    """
    one = TautExpr.build(1, 2, [DecoratedGraphTerm(Fraction(1), StableTree.trivial(1, 2))])
    x = zero_section_pullback(one, 0, [1, -1])
    assert [(t.coefficient, t.decoration) for t in x.terms] == [
        (Fraction(-1), (("lam1v0", 1),)),
        (Fraction(1, 2), (("psi1", 1),)),
        (Fraction(1, 2), (("psi2", 1),)),
    ]
    lam = DecoratedGraphTerm(Fraction(1), StableTree.trivial(1, 2), (("lam1v0", 1),))
    assert zero_section_pullback(one, 0, [0, 0]) == TautExpr.build(1, 2, [lam]).scale(-1)
    with pytest.raises(BadMatrix):
        zero_section_pullback(one, 0, [1, 0])
    with pytest.raises(BadMatrix):
        zero_section_pullback(one, 0, [1, 0, -1])


@pytest.mark.timeout(60)
def test_pr_pullback_genus_two(serial_config) -> None:
    """
    For g = 2 the single edge of A_1 x A_1 gives four marked strata. Each carries -lambda_1
    of the root, psi-terms where the markings reach the root through different legs and two
    divisors where both markings sit on the root.
    """
    x = pr_pullback(2, serial_config)
    assert (x.g, x.n) == (2, 2)
    assert x.degrees() == {2}
    assert len(x) == 12
    assert all(t.graph.edges for t in x.terms)
    assert sorted(len(t.graph.edges) for t in x.terms) == [1] * 10 + [2] * 2
    coefficients = sorted(t.coefficient for t in x.terms)
    assert coefficients == [Fraction(-1)] * 4 + [Fraction(-1, 2)] * 2 + [Fraction(1, 2)] * 6
    with pytest.raises(OutOfRange):
        pr_pullback(1)


@pytest.mark.timeout(120)
@pytest.mark.parametrize("g", [2, 3])
def test_delta_class(g, serial_config) -> None:
    """
    Delta_{g,1} is homogeneous of degree g on M_{g,2}^ct.
    """
    delta = delta_class(g, serial_config)
    assert (delta.g, delta.n) == (g, 2)
    assert not delta.is_zero()
    assert delta.degrees() == {g}


@pytest.mark.timeout(60)
def test_delta_class_genus_two(serial_config) -> None:
    """
    On the open part only the projection contributes, -p lambda_1 (psi1 + psi2) / 2; the
    boundary part is the product locus pullback.
    """
    delta = delta_class(2, serial_config)
    p = pr_prefactor(2, 1)
    interior = [t for t in delta.terms if not t.graph.edges]
    assert [(t.coefficient, t.decoration) for t in interior] == [
        (-p / 2, (("lam1v0", 1), ("psi1", 1))),
        (-p / 2, (("lam1v0", 1), ("psi2", 1))),
    ]
    theta = theta_matrix_pullback(b_matrix(1), 1, 2)
    assert delta + lambda_product(theta, 1).scale(p) == pr_pullback(2, serial_config)
    with pytest.raises(OutOfRange):
        delta_class(1)


if __name__ == "__main__":
    pytest.main()
