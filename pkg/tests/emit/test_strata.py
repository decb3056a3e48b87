"""Test forgetful pullbacks and vertex splittings of decorated strata."""

from fractions import Fraction

import pytest

try:
    from src.scietex.torelli.emit import (
        DecoratedGraphTerm,
        StableTree,
        TautExpr,
        forget_pullback,
        branch_leg,
        split_vertex,
        restrict_to_split,
    )
except ModuleNotFoundError:
    from scietex.torelli.emit import (
        DecoratedGraphTerm,
        StableTree,
        TautExpr,
        forget_pullback,
        branch_leg,
        split_vertex,
        restrict_to_split,
    )


def _single(g: int, n: int, graph: StableTree, decoration=()) -> TautExpr:
    return TautExpr.build(g, n, [DecoratedGraphTerm(Fraction(1), graph, decoration)])


def test_forget_boundary() -> None:
    """
    The new marking lands on either side of the node; half-edges move up.
    """
    delta = _single(2, 0, StableTree((1, 1), ((1,), (2,)), ((1, 2),)))
    x = forget_pullback(delta)
    assert (x.g, x.n) == (2, 1)
    assert [t.graph.legs for t in x.terms] == [((1, 2), (3,)), ((2,), (1, 3))]
    assert all(t.graph.edges == ((2, 3),) for t in x.terms)
    assert all(t.coefficient == 1 and t.decoration == () for t in x.terms)
    assert forget_pullback(x).degrees() == {1}
    assert len(forget_pullback(x)) == 4


def test_forget_psi() -> None:
    """
    pi^* psi_1 = psi_1 - delta_{0,{1,2}} on M_{1,2}.
    """
    x = forget_pullback(_single(1, 1, StableTree.trivial(1, 1), (("psi1", 1),)))
    assert [(t.coefficient, t.graph, t.decoration) for t in x.terms] == [
        (Fraction(1), StableTree.trivial(1, 2), (("psi1", 1),)),
        (Fraction(-1), StableTree((1, 0), ((3,), (1, 2, 4)), ((3, 4),)), ()),
    ]


def test_forget_kappa() -> None:
    """
    pi^* kappa_1 = kappa_1 - psi_2 on M_{1,2}.
    """
    x = forget_pullback(_single(1, 1, StableTree.trivial(1, 1), (("kap1v0", 1),)))
    assert [(t.coefficient, t.decoration) for t in x.terms] == [
        (Fraction(1), (("kap1v0", 1),)),
        (Fraction(-1), (("psi2", 1),)),
    ]


def test_split_vertex() -> None:
    """
    Splitting keeps the vertex index and appends the complement.
    """
    graph, new = split_vertex(StableTree.trivial(1, 3), 0, 0, (1, 2))
    assert new == 1
    assert graph == StableTree((0, 1), ((1, 2, 4), (3, 5)), ((4, 5),))
    assert graph.is_stable()
    assert branch_leg(graph, 1, 1) == 5
    assert branch_leg(graph, 1, 3) == 3
    assert branch_leg(graph, 0, 3) == 4


def test_restrict_to_split() -> None:
    """
    lambda_1 splits over the two vertices; psi-classes stay.
    """
    pieces = restrict_to_split((("lam1v0", 1), ("psi1", 1)), 0, 1)
    assert pieces == [
        (Fraction(1), (("lam1v1", 1), ("psi1", 1))),
        (Fraction(1), (("lam1v0", 1), ("psi1", 1))),
    ]
    assert restrict_to_split((("kap1v0", 1),), 0, 1) == [
        (Fraction(1), (("kap1v0", 1),)),
        (Fraction(1), (("kap1v1", 1),)),
    ]


if __name__ == "__main__":
    pytest.main()
