"""
Assembly of the wall-crossing formula for r <= 2.

    [M_g^ct(pi_r)]^red = sum_S 1/|Aut S| (xi_S)_* ( [M^un_{g0}(pi_r, mu^1, ..., mu^m)]^red
                                                   x prod_i ev_i^* I_{g_i,mu^i}(-Psi_i) )

Each star contributes a bundle of symbolic data handed to the script emitter: the weight,
the unramified space, the leg I-functions and the rewriting rules for Psi_i, ev_i^* H and
ev_i^* alpha_j on the blowup model of the unramified space.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from logging import Logger, getLogger

from .exceptional import case_for_markings
from .i_function import IFunctionSeries, i_function
from .star_graph import StarGraph, aut_order_star, enumerate_stars


@dataclass(frozen=True)
class WallcrossTerm:
    """
    Contribution of one star graph.

    Attributes:
        star (StarGraph): The graph.
        coefficient (Fraction): 1 / |Aut S|.
        space (str): Name of the unramified space.
        legs (tuple[IFunctionSeries, ...]): I_{g_i,mu^i}, to be evaluated at z = -Psi_i.
        substitutions (dict[str, str]): Rewriting rules for Psi_i, ev_i^* H and alpha_j.
        exceptional_case (str | None): Exceptional pushforward table used, if any.
    """

    star: StarGraph
    coefficient: Fraction
    space: str
    legs: tuple[IFunctionSeries, ...]
    substitutions: dict[str, str] = field(default_factory=dict, hash=False)
    exceptional_case: str | None = None


def unramified_space(star: StarGraph) -> str:
    """Symbol of the unramified space of the root, named by its blowup model."""
    k = star.m
    if star.is_exceptional:
        return f"M~_{{2,{k}}}"
    if star.r == 2:
        return f"M~._{{1,2+{k - 1}}}"
    return f"M^un_{{1,{k}}}(E)"


def psi_substitution(star: StarGraph) -> dict[str, str]:
    """
    Rewriting rules for the target cotangent classes and the leg evaluation classes.

    On M~_{2,k}: Psi_i = psi_i - eps_i^* psi_1 + E_i and ev_i^* H = eps_i^* psi_1 - E_i, the
    alpha_j staying as they are. On M~._{1,2+k}, with the (1,1)-leg first:
    Psi_1 = psi_p1 + psi_p2 - E, Psi_{1+i} = psi_i, and ev^* H = ev^* alpha_j = 0. For r = 1
    the root is isomorphic to the target and Psi_i = psi_i.
    """
    rules: dict[str, str] = {}
    if star.is_exceptional:
        for i in range(1, star.m + 1):
            rules[f"Psi{i}"] = f"psi{i} - eps{i}^*psi1 + E{i}"
            rules[f"H{i}"] = f"eps{i}^*psi1 - E{i}"
        for j in range(1, star.r + 1):
            rules[f"a{j}"] = f"a{j}"
    elif star.r == 2:
        rules["Psi1"] = "psi_p1 + psi_p2 - E"
        for i in range(1, star.m):
            rules[f"Psi{i + 1}"] = f"psi{i}"
        for i in range(1, star.m + 1):
            rules[f"H{i}"] = "0"
        for j in range(1, star.r + 1):
            rules[f"a{j}"] = "0"
    else:
        for i in range(1, star.m + 1):
            rules[f"Psi{i}"] = f"psi{i}"
    return rules


def wallcross_assemble(
    g: int,
    r: int,
    logger: Logger | None = None,
) -> list[WallcrossTerm]:
    """
    Term bundles of the wall-crossing formula.

    Args:
        g (int): Domain genus.
        r (int): Target dimension, 1 or 2.
        logger (Logger | None): Debug logger.

    Raises:
        UnsupportedR: If r is not 1 or 2.
        MissingTable: If a genus-2 root needs an untabulated number of markings.

    Returns:
        list[WallcrossTerm]: One bundle per star, in canonical star order.
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    terms = []
    for star in enumerate_stars(g, r, logger):
        case = case_for_markings(star.m) if star.is_exceptional else None
        legs = tuple(i_function(leg_g, mu, r) for leg_g, mu in star.legs)
        terms.append(
            WallcrossTerm(
                star,
                Fraction(1, aut_order_star(star)),
                unramified_space(star),
                legs,
                psi_substitution(star),
                case,
            )
        )
        logger.debug("Star %s: exceptional table %s", star, case)
    return terms
