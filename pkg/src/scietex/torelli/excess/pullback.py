"""
Assembly of the Torelli pullback of a product locus and the vanishing criterion.

Tor^*([A_{g_1} x ... x A_{g_k}]) = sum_T (1 / |Aut T|) (xi_T)_* Cont_T, the sum running over
the mu-colored extremal trees. Since R^{>2g-3}(M_g^ct) = 0, the pullback vanishes as soon as
the codimension exceeds 2g - 3.
"""

from dataclasses import dataclass
from logging import Logger, getLogger

from sympy.utilities.iterables import partitions

from ..config import ComputeConfigModel
from ..emit.taut_expr import TautExpr
from ..trees import ColoredTree, Partition
from .contribution import ContPoly, contribution_table
from .substitution import substitute


@dataclass(frozen=True)
class PullbackTerm:
    """
    Contribution of one tree to the pullback.

    Attributes:
        tree (ColoredTree): The tree T, indexing the gluing graph xi_T.
        cont (ContPoly): Cont_T.
        expression (TautExpr): (1 / |Aut T|) (xi_T)_* Cont_T.
    """

    tree: ColoredTree
    cont: ContPoly
    expression: TautExpr


def codimension(mu: Partition) -> int:
    """cod_mu = sum_{i<j} g_i g_j."""
    return mu.codimension


def tautological_dimension_bound(g: int) -> int:
    """Top degree 2g - 3 of R*(M_g^ct)."""
    return 2 * g - 3


def vanishing_predicate(mu: Partition) -> bool:
    """True iff cod_mu > 2g - 3, so that the pullback vanishes for degree reasons."""
    return codimension(mu) > tautological_dimension_bound(mu.total)


def nontrivial_cases(g: int) -> list[Partition]:
    """
    Partitions of g with at least two parts and cod_mu <= 2g - 3, parts nonincreasing.

    These are (g-1, 1), (g-2, 2), (3, 3) and (g-2, 1, 1) whenever they exist.
    """
    found = []
    for multiplicities in partitions(g):
        parts = tuple(
            sorted(
                (p for p, m in multiplicities.items() for _ in range(m)),
                reverse=True,
            )
        )
        if len(parts) < 2:
            continue
        mu = Partition(parts)
        if not vanishing_predicate(mu):
            found.append(mu)
    return sorted(found, key=lambda mu: mu.parts, reverse=True)


def pullback_terms(
    mu: Partition,
    config: ComputeConfigModel | None = None,
    logger: Logger | None = None,
) -> list[PullbackTerm]:
    """Per-tree terms of the pullback, ordered by (edge count, encoding)."""
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    table = contribution_table(mu, config, logger)
    return [
        PullbackTerm(cont.tree, cont, substitute(cont.tree, cont, config, logger))
        for cont in table.values()
    ]


def torelli_pullback(
    mu: Partition,
    config: ComputeConfigModel | None = None,
    logger: Logger | None = None,
) -> TautExpr:
    """
    Tor^*([A_{g_1} x ... x A_{g_k}]) as a tautological expression on M_g^ct.

    Args:
        mu (Partition): The partition.
        config (ComputeConfigModel | None): Worker count and rank cap.
        logger (Logger | None): Progress logger.

    Returns:
        TautExpr: Sum of the substituted contributions, each term on its gluing graph.
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    if vanishing_predicate(mu):
        logger.info(
            "Partition %s has codimension %d > %d, the pullback vanishes",
            mu,
            codimension(mu),
            tautological_dimension_bound(mu.total),
        )
    result = TautExpr.zero(mu.total, 0)
    for term in pullback_terms(mu, config, logger):
        result = result + term.expression
    return result
