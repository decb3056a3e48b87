"""Test decorated stable trees and tautological expressions."""

from fractions import Fraction

import pytest

try:
    from src.scietex.torelli.algebra import poly_ring, gen
    from src.scietex.torelli.emit import (
        AmbientMismatch,
        StableTree,
        DecoratedGraphTerm,
        TautExpr,
        parse_symbol,
        symbol_degree,
        normalize_decoration,
        taut_expr_to_json,
        taut_expr_from_json,
        lambda_restriction,
        lambda_product,
        decoration_text,
    )
except ModuleNotFoundError:
    from scietex.torelli.algebra import poly_ring, gen
    from scietex.torelli.emit import (
        AmbientMismatch,
        StableTree,
        DecoratedGraphTerm,
        TautExpr,
        parse_symbol,
        symbol_degree,
        normalize_decoration,
        taut_expr_to_json,
        taut_expr_from_json,
        lambda_restriction,
        lambda_product,
        decoration_text,
    )


def test_stable_tree() -> None:
    """
    Test the boundary divisor graph.
    """
    graph = StableTree.divisor(2, 1, [1], 2)
    assert graph.genera == (1, 1)
    assert graph.legs == ((1, 3), (2, 4))
    assert graph.edges == ((3, 4),)
    assert graph.genus == 2
    assert graph.n_markings == 2
    assert graph.dimension() == 4
    assert graph.vertex_of(4) == 1
    assert graph.is_stable()
    assert not StableTree.divisor(2, 0, [1], 2).is_stable()
    assert StableTree.from_dict(graph.to_dict()) == graph
    with pytest.raises(KeyError):
        graph.vertex_of(7)


def test_symbols() -> None:
    """
    Test decoration symbols.
    """
    assert parse_symbol("psi3") == ("psi", 3, 1)
    assert parse_symbol("lam2v1") == ("lam", 1, 2)
    assert parse_symbol("kap1v0") == ("kap", 0, 1)
    assert symbol_degree("lam2v1") == 2
    with pytest.raises(ValueError):
        parse_symbol("theta1")
    factors = [("psi1", 1), ("lam1v0", 1), ("psi1", 1), ("kap1v0", 0)]
    assert normalize_decoration(factors) == (("lam1v0", 1), ("psi1", 2))
    assert decoration_text((("lam1v0", 1), ("psi3", 2))) == "lam1v0*psi3^2"
    assert decoration_text(()) == "1"


def test_normal_form() -> None:
    """
    Terms are merged, cancelled and dropped when they vanish.
    """
    trivial = StableTree.trivial(1, 1)
    psi = (("psi1", 1),)
    x = TautExpr.build(
        1,
        1,
        [
            DecoratedGraphTerm(Fraction(1, 2), trivial, psi),
            DecoratedGraphTerm(Fraction(1, 2), trivial, psi),
            DecoratedGraphTerm(Fraction(1), trivial, (("psi1", 2),)),
            DecoratedGraphTerm(Fraction(1), trivial, (("lam2v0", 1),)),
        ],
    )
    assert len(x) == 1
    assert x.terms[0].coefficient == 1
    assert x.degrees() == {1}
    assert (x - x).is_zero()
    assert (2 * x).terms[0].coefficient == 2


def test_ambient_mismatch() -> None:
    """
    Expressions on different spaces do not mix.
    """
    with pytest.raises(AmbientMismatch):
        TautExpr.build(2, 1, [DecoratedGraphTerm(Fraction(1), StableTree.trivial(2, 2))])
    with pytest.raises(AmbientMismatch):
        _ = TautExpr.zero(2, 1) + TautExpr.zero(2, 2)


def test_from_polynomial() -> None:
    """
    Variable names become decoration symbols.
    """
    r = poly_ring(("psi1", "lam1v0"))
    p = 2 * gen(r, "psi1") + gen(r, "lam1v0")
    x = TautExpr.from_polynomial(2, 1, StableTree.trivial(2, 1), p, Fraction(1, 2))
    assert [(t.coefficient, t.decoration) for t in x.terms] == [
        (Fraction(1, 2), (("lam1v0", 1),)),
        (Fraction(1), (("psi1", 1),)),
    ]


def test_lambda_product() -> None:
    """
    lambda_1 splits over the vertices of a stratum.
    """
    graph = StableTree.divisor(2, 1, [1], 2)
    assert lambda_restriction(graph, 1) == [
        (Fraction(1), (("lam1v1", 1),)),
        (Fraction(1), (("lam1v0", 1),)),
    ]
    assert lambda_restriction(graph, 3) == []
    x = TautExpr.build(2, 2, [DecoratedGraphTerm(Fraction(3), graph)])
    product = lambda_product(x, 1)
    assert len(product) == 2
    assert product.degrees() == {2}
    assert all(t.coefficient == 3 for t in product.terms)


def test_json() -> None:
    """
    The canonical JSON text reads back to the same expression.
    """
    graph = StableTree.divisor(2, 1, [1], 2)
    x = TautExpr.build(
        2, 2, [DecoratedGraphTerm(Fraction(-1, 4), graph, (("lam1v1", 1), ("psi1", 1)))]
    )
    text = taut_expr_to_json(x)
    assert taut_expr_from_json(text) == x
    assert taut_expr_to_json(taut_expr_from_json(text)) == text


if __name__ == "__main__":
    pytest.main()
