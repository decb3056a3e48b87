"""
Operations on decorated strata of M_{g,n}^ct.

`forget_pullback` pulls an expression back along the forgetful map M_{g,n+1} -> M_{g,n}. The
new marking n+1 lands on each vertex in turn; on that vertex

    pi^* psi_h = psi_h - D_{h,p},    pi^* kappa_a = kappa_a - psi_p^a,

where D_{h,p} is the genus-0 bubble carrying h and the new marking p. Since psi_h D_{h,p} = 0
and D_{h,p}^k = D_{h,p} (-psi_node)^(k-1), a power psi_h^k contributes the single correction
-D_{h,p} psi_node^(k-1).

`split_vertex` realizes a boundary divisor of one vertex moduli space as a new stratum and
`restrict_to_split` restricts the vertex lambda- and kappa-classes to it.
"""

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

import networkx as nx

from .taut_expr import (
    Decoration,
    DecoratedGraphTerm,
    StableTree,
    TautExpr,
    normalize_decoration,
    parse_symbol,
)

Piece = tuple[Fraction, Decoration]


def max_label(graph: StableTree) -> int:
    """Largest leg label, 0 for a graph without legs."""
    return max((h for legs in graph.legs for h in legs), default=0)


def _shift(graph: StableTree, decoration: Decoration, n: int) -> tuple[StableTree, Decoration]:
    """Move every half-edge label above n up by one, freeing n + 1 for a new marking."""

    def move(h: int) -> int:
        return h + 1 if h > n else h

    shifted = StableTree(
        graph.genera,
        tuple(tuple(move(h) for h in legs) for legs in graph.legs),
        tuple((move(a), move(b)) for a, b in graph.edges),
    )
    moved = []
    for symbol, exponent in decoration:
        kind, where, _ = parse_symbol(symbol)
        moved.append((f"psi{move(where)}" if kind == "psi" else symbol, exponent))
    return shifted, normalize_decoration(moved)


def _with_leg(graph: StableTree, v: int, leg: int) -> StableTree:
    legs = list(graph.legs)
    legs[v] = tuple(sorted(legs[v] + (leg,)))
    return StableTree(graph.genera, tuple(legs), graph.edges)


def _multiply(left: list[Piece], right: list[Piece]) -> list[Piece]:
    return [
        (a * b, normalize_decoration(x + y)) for a, x in left for b, y in right if a and b
    ]


def _expand(factors: Iterable[list[Piece]]) -> list[Piece]:
    result: list[Piece] = [(Fraction(1), ())]
    for factor in factors:
        result = _multiply(result, factor)
    return result


def _kappa_pullback(index: int, exponent: int, v: int, p: int) -> list[Piece]:
    """(kappa_index - psi_p^index)^exponent on vertex v."""
    return [
        (
            Fraction(comb(exponent, j) * (-1) ** j),
            normalize_decoration(
                ((f"kap{index}v{v}", exponent - j), (f"psi{p}", index * j))
            ),
        )
        for j in range(exponent + 1)
    ]


def _bubble(graph: StableTree, v: int, leg: int, p: int) -> tuple[StableTree, int]:
    """D_{leg,p}: a genus-0 vertex with leg and p glued to v. Returns the graph and the node."""
    top = max(max_label(graph), p)
    a, b = top + 1, top + 2
    legs = list(graph.legs)
    legs[v] = tuple(sorted(tuple(h for h in legs[v] if h != leg) + (a,)))
    legs.append(tuple(sorted((leg, p, b))))
    return StableTree(graph.genera + (0,), tuple(legs), graph.edges + ((a, b),)), a


def _pullback_at_vertex(
    graph: StableTree, decoration: Decoration, v: int, p: int
) -> list[tuple[Fraction, StableTree, Decoration]]:
    here = set(graph.legs[v])
    kappas = []
    rest = []
    psis = []
    for symbol, exponent in decoration:
        kind, where, index = parse_symbol(symbol)
        if kind == "kap" and where == v:
            kappas.append((index, exponent))
            continue
        if kind == "psi" and where in here:
            psis.append((where, exponent))
        rest.append((symbol, exponent))
    marked = _with_leg(graph, v, p)
    main = _expand(_kappa_pullback(index, e, v, p) for index, e in kappas)
    result = [(c, marked, normalize_decoration(tuple(rest) + extra)) for c, extra in main]
    kappa_part = tuple((f"kap{index}v{v}", e) for index, e in kappas)
    for leg, k in psis:
        bubble, node = _bubble(graph, v, leg, p)
        moved = [(s, e) for s, e in rest if s != f"psi{leg}"]
        moved.append((f"psi{node}", k - 1))
        result.append((Fraction(-1), bubble, normalize_decoration(tuple(moved) + kappa_part)))
    return result


def forget_pullback(x: TautExpr) -> TautExpr:
    """
    Pullback along M_{g,n+1}^ct -> M_{g,n}^ct forgetting the new marking n + 1.

    Half-edge labels move up by one to keep the markings first; vertex indices are kept and
    bubbles are appended as new vertices.

    Args:
        x (TautExpr): Expression on M_{g,n}^ct.

    Returns:
        TautExpr: Expression on M_{g,n+1}^ct.
    """
    p = x.n + 1
    terms = []
    for term in x.terms:
        graph, decoration = _shift(term.graph, term.decoration, x.n)
        for v in range(len(graph.genera)):
            for coeff, stratum, dec in _pullback_at_vertex(graph, decoration, v, p):
                terms.append(DecoratedGraphTerm(coeff * term.coefficient, stratum, dec))
    return TautExpr.build(x.g, p, terms)


def branch_leg(graph: StableTree, v: int, leg: int) -> int:
    """The leg of vertex v on the path from v to `leg`; `leg` itself when it sits at v."""
    if leg in graph.legs[v]:
        return leg
    tree = nx.Graph()
    tree.add_nodes_from(range(len(graph.genera)))
    for a, b in graph.edges:
        tree.add_edge(graph.vertex_of(a), graph.vertex_of(b), legs=(a, b))
    step = nx.shortest_path(tree, v, graph.vertex_of(leg))[1]
    a, b = tree.edges[v, step]["legs"]
    return a if a in graph.legs[v] else b


def split_vertex(
    graph: StableTree, v: int, h: int, subset: Sequence[int]
) -> tuple[StableTree, int]:
    """
    The divisor delta_{h,S} of the moduli space of vertex v.

    Vertex v keeps genus h and the legs S; a new last vertex takes genus g(v) - h and the
    other legs. Returns the graph and the index of the new vertex.
    """
    a, b = max_label(graph) + 1, max_label(graph) + 2
    chosen = tuple(sorted(subset))
    rest = tuple(x for x in graph.legs[v] if x not in chosen)
    legs = list(graph.legs)
    legs[v] = chosen + (a,)
    legs.append(rest + (b,))
    genera = list(graph.genera)
    genera[v] = h
    genera.append(graph.genera[v] - h)
    return StableTree(tuple(genera), tuple(legs), graph.edges + ((a, b),)), len(genera) - 1


def _lambda_pair(v: int, i: int, w: int, j: int) -> Decoration:
    """lambda_i(v) lambda_j(w), lambda_0 = 1."""
    return normalize_decoration((f"lam{k}v{u}", 1) for u, k in ((v, i), (w, j)) if k)


def restrict_to_split(decoration: Decoration, v: int, w: int) -> list[Piece]:
    """
    Restriction of a decoration to the stratum where vertex v splits off vertex w.

    lambda_i of v becomes sum_j lambda_j(v) lambda_{i-j}(w) and kappa_a of v becomes
    kappa_a(v) + kappa_a(w); psi-classes follow their legs.
    """
    fixed = []
    factors: list[list[Piece]] = []
    for symbol, exponent in decoration:
        kind, where, index = parse_symbol(symbol)
        if kind == "psi" or where != v:
            fixed.append((symbol, exponent))
            continue
        if kind == "lam":
            split = [(Fraction(1), _lambda_pair(v, j, w, index - j)) for j in range(index + 1)]
        else:
            split = [
                (Fraction(1), ((f"kap{index}v{v}", 1),)),
                (Fraction(1), ((f"kap{index}v{w}", 1),)),
            ]
        factors.extend([split] * exponent)
    return [(c, normalize_decoration(tuple(fixed) + dec)) for c, dec in _expand(factors)]
