"""
Substitution of contributions into tautological classes on the stratum of a tree.

The edge variable z_e becomes -(psi' + psi''), the cotangent classes at the two branches of
the node. The Chern classes of N become those of the sum of E_v^dual (x) E_w^dual over pairs
of positive-genus vertices v, w of different colors, expanded in the vertex lambda-classes.
"""

from fractions import Fraction
from logging import Logger, getLogger
from math import comb

from sympy.polys.rings import PolyElement

from ..algebra import (
    elementary_to_power_sums,
    gen,
    graded_piece,
    poly_ring,
    power_sums_to_elementary,
    ring_names,
    substitute as substitute_poly,
    truncate,
)
from ..config import ComputeConfigModel, resolve_config
from ..emit.taut_expr import StableTree, TautExpr, symbol_degree
from ..trees import ColoredTree, automorphism_order
from .contribution import ContPoly
from .exceptions import RankOverflow


def box_tensor_chern(
    r1: int,
    r2: int,
    up_to: int,
    config: ComputeConfigModel | None = None,
) -> list[PolyElement]:
    """
    Chern classes of E1^dual (x) E2^dual for bundles of ranks r1 and r2.

    The roots of the tensor product are -a_i - b_j, so its power sums are

        p_k = (-1)^k sum_m C(k, m) p_m(a) p_{k-m}(b),   p_0(a) = r1, p_0(b) = r2,

    and Newton's identities turn them into elementary symmetric polynomials.

    Args:
        r1 (int): Rank of the first bundle, >= 1.
        r2 (int): Rank of the second bundle, >= 1.
        up_to (int): Highest Chern class wanted; classes above r1 * r2 vanish.
        config (ComputeConfigModel | None): Supplies the rank cap.

    Raises:
        RankOverflow: If r1 * r2 exceeds the rank cap.

    Returns:
        list[PolyElement]: c_0 = 1, c_1, ..., c_up_to in the ring (la1..la_r1, lb1..lb_r2)
            of the Chern classes of E1 and E2.
    """
    if r1 < 1 or r2 < 1:
        raise ValueError(f"Ranks must be positive, got ({r1}, {r2})")
    cfg = resolve_config(config)
    if r1 * r2 > cfg.rank_cap:
        raise RankOverflow(f"Rank {r1} x {r2} = {r1 * r2} exceeds the cap {cfg.rank_cap}")
    first = [f"la{i + 1}" for i in range(r1)]
    second = [f"lb{i + 1}" for i in range(r2)]
    r = poly_ring(tuple(first + second))
    top = min(up_to, r1 * r2)
    p_a = [r.one * r1] + elementary_to_power_sums([gen(r, x) for x in first], top, r)
    p_b = [r.one * r2] + elementary_to_power_sums([gen(r, x) for x in second], top, r)
    power_sums = []
    for k in range(1, top + 1):
        total = sum((p_a[m] * p_b[k - m] * comb(k, m) for m in range(k + 1)), r.zero)
        power_sums.append(total if k % 2 == 0 else -total)
    classes = power_sums_to_elementary(power_sums, r)
    return classes + [r.zero] * (up_to - top)


def half_edges(index: int) -> tuple[int, int]:
    """Leg labels of the two branches of edge `index`; there are no markings."""
    return 2 * index + 1, 2 * index + 2


def graph_of_tree(t: ColoredTree) -> StableTree:
    """The gluing graph xi_T as a stable tree without markings."""
    legs: list[list[int]] = [[] for _ in t.genera]
    for index, (a, b) in enumerate(t.edges):
        first, second = half_edges(index)
        legs[a].append(first)
        legs[b].append(second)
    return StableTree(
        tuple(t.genera),
        tuple(tuple(sorted(x)) for x in legs),
        tuple(half_edges(index) for index in range(t.n_edges)),
    )


def normal_bundle_chern(
    t: ColoredTree, up_to: int, config: ComputeConfigModel | None = None
) -> list[PolyElement]:
    """
    c_0, ..., c_up_to of the sum of E_v^dual (x) E_w^dual over pairs v < w of positive
    vertices of different colors, in the vertex lambda-classes lam<i>v<v>.
    """
    names: list[str] = []
    for v in t.positive_vertices:
        names.extend(f"lam{i}v{v}" for i in range(1, t.genera[v] + 1))
    r = poly_ring(tuple(names))
    weights = [symbol_degree(name) for name in ring_names(r)] if names else None
    total = r.one
    for v in t.positive_vertices:
        for w in t.positive_vertices:
            if w <= v or t.colors[v] == t.colors[w]:
                continue
            factor = box_tensor_chern(t.genera[v], t.genera[w], up_to, config)
            images = {f"la{i}": gen(r, f"lam{i}v{v}") for i in range(1, t.genera[v] + 1)}
            images.update({f"lb{i}": gen(r, f"lam{i}v{w}") for i in range(1, t.genera[w] + 1)})
            mapped = sum((substitute_poly(c, images, r) for c in factor), r.zero)
            total = truncate(total * mapped, up_to, weights=weights)
    return [graded_piece(total, i, weights) for i in range(up_to + 1)]


def substitute(
    t: ColoredTree,
    cont: ContPoly,
    config: ComputeConfigModel | None = None,
    logger: Logger | None = None,
) -> TautExpr:
    """
    The term (1 / |Aut T|) (xi_T)_* Cont_T on M_g^ct.

    Args:
        t (ColoredTree): The tree; it must be the tree of `cont`.
        cont (ContPoly): Its contribution.
        config (ComputeConfigModel | None): Supplies the rank cap.
        logger (Logger | None): Debug logger.

    Raises:
        RankOverflow: If a box-tensor expansion exceeds the rank cap.

    Returns:
        TautExpr: Decorations in psi classes of the half-edges and vertex lambda-classes,
            truncated at the vertex dimensions.
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    if cont.tree != t:
        raise ValueError("Contribution does not belong to the tree")
    model = cont.model
    graph = graph_of_tree(t)
    psi_names = [f"psi{h}" for index in range(t.n_edges) for h in half_edges(index)]
    classes = normal_bundle_chern(t, model.rank, config)
    lam_names = list(ring_names(classes[0].ring)) if t.positive_vertices else []
    target = poly_ring(tuple(psi_names + [x for x in lam_names if x != "_"]))
    images: dict[str, PolyElement] = {}
    for index in range(t.n_edges):
        first, second = half_edges(index)
        images[f"z{index + 1}"] = -(gen(target, f"psi{first}") + gen(target, f"psi{second}"))
    for i, name in enumerate(model.chern_vars):
        images[name] = classes[i + 1].set_ring(target)
    decorated = substitute_poly(cont.expression, images, target)
    weight = automorphism_order(t)
    result = TautExpr.from_polynomial(
        sum(t.genera), 0, graph, decorated, coefficient=Fraction(1, weight)
    )
    logger.debug("Substituted tree with %d edges: %d terms", t.n_edges, len(result))
    return result
