"""Test excess intersection contributions."""

import pytest

try:
    from src.scietex.torelli.algebra import parse_poly, render
    from src.scietex.torelli.trees import Partition, make_tree, encoding_text, InvalidTree
    from src.scietex.torelli.excess import (
        NotIrreducible,
        local_model,
        cont_irreducible,
        cont_recursive,
        contribution_table,
        recursion_residual,
        is_root_symmetric,
        degree_check,
        render_contribution,
        cont_to_dict,
        cont_from_dict,
        to_chern_form,
        to_root_form,
    )
except ModuleNotFoundError:
    from scietex.torelli.algebra import parse_poly, render
    from scietex.torelli.trees import Partition, make_tree, encoding_text, InvalidTree
    from scietex.torelli.excess import (
        NotIrreducible,
        local_model,
        cont_irreducible,
        cont_recursive,
        contribution_table,
        recursion_residual,
        is_root_symmetric,
        degree_check,
        render_contribution,
        cont_to_dict,
        cont_from_dict,
        to_chern_form,
        to_root_form,
    )

STAR_CONTRIBUTION = (
    "-3*c5 + (4*z1 + 4*z2 + 6*z3)*c4"
    " - (5*z1^2 + 5*z1*z2 + 10*z1*z3 + 5*z2^2 + 10*z2*z3 + 10*z3^2)*c3"
    " + (6*z1^3 + 6*z1^2*z2 + 15*z1^2*z3 + 6*z1*z2^2 + 15*z1*z2*z3 + 20*z1*z3^2"
    " + 6*z2^3 + 15*z2^2*z3 + 20*z2*z3^2 + 15*z3^3)*c2"
    " - (7*z1^4 + 7*z1^3*z2 + 21*z1^3*z3 + 7*z1^2*z2^2 + 21*z1^2*z2*z3 + 35*z1^2*z3^2"
    " + 7*z1*z2^3 + 21*z1*z2^2*z3 + 35*z1*z2*z3^2 + 35*z1*z3^3 + 7*z2^4 + 21*z2^3*z3"
    " + 35*z2^2*z3^2 + 35*z2*z3^3 + 21*z3^4)*c1"
    " + 8*z1^5 + 8*z1^4*z2 + 28*z1^4*z3 + 8*z1^3*z2^2 + 28*z1^3*z2*z3 + 56*z1^3*z3^2"
    " + 8*z1^2*z2^3 + 28*z1^2*z2^2*z3 + 56*z1^2*z2*z3^2 + 70*z1^2*z3^3 + 8*z1*z2^4"
    " + 28*z1*z2^3*z3 + 56*z1*z2^2*z3^2 + 70*z1*z2*z3^3 + 56*z1*z3^4 + 8*z2^5"
    " + 28*z2^4*z3 + 56*z2^3*z3^2 + 70*z2^2*z3^3 + 56*z2*z3^4 + 28*z3^5"
)


def test_local_model(star_tree, partition_24) -> None:
    """
    Test the local model of the star.
    """
    model = local_model(star_tree, partition_24)
    assert (model.d, model.c, model.rank) == (8, 2, 6)
    assert model.chern_vars == ("c1", "c2", "c3", "c4", "c5", "c6")
    assert len(model.chern_classes) == 9
    top = model.top_class()
    assert top == parse_poly("e6*(z1 + z3)*(z2 + z3)", model.elementary_ring)
    with pytest.raises(InvalidTree):
        local_model(star_tree, Partition((3, 3)))


def test_single_edge() -> None:
    """
    The one-edge tree of (1, 2) contributes c1 - z1.
    """
    t = make_tree([(1, 1), (2, 2)], [(0, 1)])
    cont = cont_irreducible(t)
    assert cont.degree == 1
    assert render_contribution(cont) == "c1 - z1"
    assert str(cont_recursive(t)) == "c1 - z1"


def test_representations() -> None:
    """
    The elementary, Chern and root forms of the one-edge contribution.
    """
    cont = cont_irreducible(make_tree([(1, 1), (2, 2)], [(0, 1)]))
    assert render(cont.elementary) == "e1"
    assert to_chern_form(cont) == cont.expression
    assert render(to_root_form(cont)) == "l1"


def test_chain_13() -> None:
    """
    The chain of (1, 3) groups its negative z-part in parentheses.
    """
    t = make_tree([(1, 2), (1, 1), (2, 2)], [(0, 1), (1, 2)])
    cont = cont_recursive(t)
    assert cont.model.rank == 1
    assert render_contribution(cont) == "c1 - (z1 + z2)"


def test_rank_zero() -> None:
    """
    With as many critical paths as the codimension the contribution is 1.
    """
    t = make_tree([(1, 2), (1, 1), (1, 2)], [(0, 1), (1, 2)])
    cont = cont_irreducible(t)
    assert cont.model.rank == 0
    assert render_contribution(cont) == "1"


@pytest.mark.timeout(300)
def test_star_contribution(star_tree) -> None:
    """
    Test the full contribution of the genus-0 centered star of (2, 4).
    """
    cont = cont_recursive(star_tree)
    assert cont.degree == 5
    text = render_contribution(cont)
    assert text.startswith("-3*c5 + (4*z1 + 4*z2 + 6*z3)*c4")
    assert text.endswith("28*z3^5")
    assert text == STAR_CONTRIBUTION
    assert cont.expression == parse_poly(STAR_CONTRIBUTION, cont.model.chern_ring)
    assert is_root_symmetric(cont)
    with pytest.raises(NotIrreducible):
        cont_irreducible(star_tree)


@pytest.mark.timeout(300)
@pytest.mark.parametrize("parts", [(1, 2), (2, 2), (1, 3), (1, 1, 1)])
def test_table_consistency(parts, serial_config) -> None:
    """
    Every contribution satisfies its recursion and has the expected degree.
    """
    mu = Partition(parts)
    table = contribution_table(mu, config=serial_config)
    assert list(table) == sorted(table, key=lambda k: (table[k].tree.n_edges, k))
    assert degree_check(mu, table)
    for key, cont in table.items():
        assert key == encoding_text(cont.tree)
        assert not recursion_residual(cont, dict(table))


def test_serialization() -> None:
    """
    Contributions survive their dictionary form.
    """
    t = make_tree([(1, 2), (1, 1), (2, 2)], [(0, 1), (1, 2)])
    cont = cont_recursive(t)
    restored = cont_from_dict(cont_to_dict(cont))
    assert restored.tree == cont.tree
    assert restored.elementary == cont.elementary


if __name__ == "__main__":
    pytest.main()
