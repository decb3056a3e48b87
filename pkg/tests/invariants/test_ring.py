"""Test the invariant ring I_{g,s}."""

from fractions import Fraction
from math import factorial, prod

import pytest
from sympy import Matrix, Poly, expand, symbols

try:
    from src.scietex.torelli.config import ComputeConfig
    from src.scietex.torelli.algebra import is_nonsingular, render
    from src.scietex.torelli.lambda_ring import WrongDegree
    from src.scietex.torelli.invariants import (
        InvariantCapExceeded,
        MonomialSyntaxError,
        InvClass,
        Sym2Index,
        inv_names,
        fold_dimension,
        check_caps,
        parse_monomial,
        monomials,
        integrate,
        dims,
        quotient_basis,
        gram_matrix,
        gram_rows,
        normal_form,
        is_zero_class,
        relation_basis,
        span_rank,
        iota,
        socle_class,
        pairing_kernel_dimension,
        monomial_weight,
        matrix_names,
        integrate_monomial,
    )
except ModuleNotFoundError:
    from scietex.torelli.config import ComputeConfig
    from scietex.torelli.algebra import is_nonsingular, render
    from scietex.torelli.lambda_ring import WrongDegree
    from scietex.torelli.invariants import (
        InvariantCapExceeded,
        MonomialSyntaxError,
        InvClass,
        Sym2Index,
        inv_names,
        fold_dimension,
        check_caps,
        parse_monomial,
        monomials,
        integrate,
        dims,
        quotient_basis,
        gram_matrix,
        gram_rows,
        normal_form,
        is_zero_class,
        relation_basis,
        span_rank,
        iota,
        socle_class,
        pairing_kernel_dimension,
        monomial_weight,
        matrix_names,
        integrate_monomial,
    )


def test_generators() -> None:
    """
    Test generator naming and order.
    """
    assert inv_names(1) == ("t1",)
    assert inv_names(3) == ("t1", "t2", "t3", "e12", "e13", "e23")
    assert Sym2Index.of(3, 1) == Sym2Index(1, 3)
    assert Sym2Index.of(2, 2).is_diagonal
    assert fold_dimension(2, 3) == 9
    assert len(monomials(2, 2)) == 6


def test_parse_monomial() -> None:
    """
    Test the monomial grammar.
    """
    assert parse_monomial("t1^2*e12", 2).expression.monoms() == [(2, 0, 1)]
    assert parse_monomial("e21", 2) == parse_monomial("e12", 2)
    assert parse_monomial("e11", 2) == parse_monomial("t1", 2)
    assert parse_monomial("t1**2", 1) == parse_monomial("t1^2", 1)
    assert render(parse_monomial("1", 2).expression) == "1"
    with pytest.raises(MonomialSyntaxError):
        parse_monomial("t3", 2)
    with pytest.raises(MonomialSyntaxError):
        parse_monomial("x1", 2)


def test_one_fold() -> None:
    """
    I_{g,1} is Q[theta] / theta^(g+1) with integral of theta^g equal to g!.
    """
    for g in range(1, 5):
        assert dims(g, 1) == [1] * (g + 1)
        assert integrate(parse_monomial(f"t1^{g}", 1, g)) == factorial(g)
    assert is_zero_class(parse_monomial("t1^2", 1, 1))
    assert not is_zero_class(parse_monomial("t1^2", 1, 2))


def test_two_folds_genus_one() -> None:
    """
    Integrals on I_{1,2} come from det(M) = m11 m22 - m12^2.
    """
    assert integrate(parse_monomial("t1*t2", 2, 1)) == 1
    assert integrate(parse_monomial("e12^2", 2, 1)) == -2
    assert integrate(parse_monomial("t1^2", 2, 1)) == 0
    assert dims(1, 2) == [1, 3, 1]
    assert quotient_basis(1, 2, 0) == [(0, 0, 0)]
    assert len(quotient_basis(1, 2, 1)) == 3
    assert len(quotient_basis(1, 2, 2)) == 1
    assert quotient_basis(1, 2, 3) == []
    relations = relation_basis(1, 2, 2)
    assert span_rank(relations, 2, 2) == 5
    assert pairing_kernel_dimension(1, 2, 2) == 5
    assert gram_rows(1, 2, 1) == [
        [Fraction(0), Fraction(1), Fraction(0)],
        [Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(-2)],
    ]


@pytest.mark.timeout(300)
@pytest.mark.parametrize("g", [1, 2, 3])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_gorenstein(g, s) -> None:
    """
    Gram matrices of the standard monomial bases are square and nonsingular, dimensions are
    palindromic with a one-dimensional socle.
    """
    d = dims(g, s)
    assert d == list(reversed(d))
    assert d[0] == d[-1] == 1
    for k in range(g * s + 1):
        gram = gram_matrix(g, s, k)
        assert gram.shape == (d[k], d[g * s - k])
        assert is_nonsingular(gram)


@pytest.mark.timeout(300)
@pytest.mark.parametrize("g, s", [(1, 2), (2, 2), (1, 3), (3, 2), (2, 3)])
def test_relations_match_pairing_kernel(g, s) -> None:
    """
    The relations span exactly the kernel of the pairing, so the standard monomials number
    the monomials minus the kernel dimension.
    """
    for k in range(g * s + 1):
        kernel = pairing_kernel_dimension(g, s, k)
        assert len(quotient_basis(g, s, k)) == len(monomials(s, k)) - kernel
        assert span_rank(relation_basis(g, s, k), k, s) == kernel


def test_standard_monomials() -> None:
    """
    Standard monomials keep the monomial order; below the relations every monomial is standard.
    """
    g, s = 2, 2
    for k in range(g * s + 1):
        basis = quotient_basis(g, s, k)
        assert basis == sorted(basis, key=monomials(s, k).index)
        assert all(sum(m) == k for m in basis)
    for k in range(g + 1):
        assert quotient_basis(g, s, k) == monomials(s, k)
    assert quotient_basis(g, s, g * s - 1) != monomials(s, g * s - 1)
    assert monomial_weight(2, (1, 0, 1)) == (3, 1)
    assert monomial_weight(3, (0, 0, 0, 1, 1, 0)) == (2, 1, 1)


@pytest.mark.parametrize("g", [1, 2])
@pytest.mark.parametrize("s", [1, 2])
def test_integrate_monomial_against_determinant(g, s) -> None:
    """
    Top-degree integrals equal a! times the coefficient of m^a in det(M)^g, expanded from a
    symbolic symmetric matrix.
    """
    entries = dict(zip(matrix_names(s), symbols(matrix_names(s))))
    m = Matrix(s, s, lambda i, j: entries[f"m{min(i, j) + 1}{max(i, j) + 1}"])
    poly = Poly(expand(m.det() ** g), *entries.values())
    for monom in monomials(s, g * s):
        term = prod(x**e for x, e in zip(entries.values(), monom))
        expected = int(poly.coeff_monomial(term)) * prod(factorial(e) for e in monom)
        assert integrate_monomial(g, s, monom) == Fraction(expected)


def test_socle() -> None:
    """
    The socle class integrates to 1.
    """
    for g, s in ((1, 1), (2, 1), (1, 2), (2, 2), (3, 2)):
        assert integrate(socle_class(g, s)) == 1
    with pytest.raises(WrongDegree):
        integrate(parse_monomial("t1", 2, 2))


def test_normal_form() -> None:
    """
    Normal forms represent the same class in the quotient basis.
    """
    x = parse_monomial("t1^2", 2, 1) + parse_monomial("t1*t2", 2, 1) * 3
    y = normal_form(x)
    assert is_zero_class(x - y)
    assert normal_form(y) == y


def test_iota() -> None:
    """
    Pairings of index strings with the generator dictionary.
    """
    assert [render(p) for p in iota(1, 1)] == ["t1"]
    assert [render(p) for p in iota(2, 1)] == ["t1", "1/2*e12", "t2"]
    assert len(iota(2, 2)) == 5


def test_inv_class() -> None:
    """
    Test class arithmetic and linear coefficients.
    """
    x = InvClass.generator(1, 2, 1, 1) + InvClass.generator(1, 2, 2, 1) * 3
    assert x.linear_coefficients() == {(1, 1): Fraction(1), (1, 2): Fraction(3)}
    assert x.homogeneous_part(1) == x
    assert not x.homogeneous_part(2)
    with pytest.raises(WrongDegree):
        (x * x).linear_coefficients()


def test_caps() -> None:
    """
    Test the genus and fold caps.
    """
    check_caps(6, 4)
    with pytest.raises(InvariantCapExceeded):
        check_caps(7, 1)
    with pytest.raises(InvariantCapExceeded):
        check_caps(2, 3, ComputeConfig(inv_max_folds=2))
    with pytest.raises(ValueError):
        check_caps(2, 0)


if __name__ == "__main__":
    pytest.main()
