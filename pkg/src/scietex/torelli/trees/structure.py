"""
Structure theory of colored extremal trees: automorphisms, smoothings and local equations.

A smoothing structure on T contracts a nonempty set F of edges. The fibers of the vertex map
are the connected components of (V(T), F); each fiber carries the genus sum of its vertices
and their common color. The target must again be a stable colored extremal tree. Distinct
contracted sets give distinct structures even when their targets are isomorphic.
"""

from dataclasses import dataclass
from logging import Logger, getLogger

from networkx.algorithms.isomorphism import GraphMatcher
from sympy.polys.rings import PolyElement

from ..algebra import poly_ring
from .colored_tree import ColoredTree, critical_paths, is_extremal
from .encoding import edge_labels


def _node_match(a: dict, b: dict) -> bool:
    return a["genus"] == b["genus"] and a["color"] == b["color"]


def automorphism_order(t: ColoredTree) -> int:
    """Order of the group of genus- and color-preserving automorphisms."""
    graph = t.graph()
    return sum(1 for _ in GraphMatcher(graph, graph, node_match=_node_match).isomorphisms_iter())


def isomorphism(source: ColoredTree, target: ColoredTree) -> dict[int, int] | None:
    """A genus- and color-preserving isomorphism source -> target, or None."""
    matcher = GraphMatcher(source.graph(), target.graph(), node_match=_node_match)
    return next(matcher.isomorphisms_iter(), None)


@dataclass(frozen=True)
class SmoothingStructure:
    """
    Smoothing of a tree T onto a tree T'.

    Attributes:
        source (ColoredTree): T.
        target (ColoredTree): T', vertices numbered by the smallest T-vertex of each fiber.
        vertex_map (tuple[int, ...]): phi, T-vertex to T'-vertex.
        contracted (tuple[int, ...]): Sorted indices of the contracted T-edges.
        edge_map (tuple[int, ...]): epsilon, T'-edge index to the T-edge joining the fibers.
    """

    source: ColoredTree
    target: ColoredTree
    vertex_map: tuple[int, ...]
    contracted: tuple[int, ...]
    edge_map: tuple[int, ...]

    @property
    def fibers(self) -> list[tuple[int, ...]]:
        """Vertex groups V_1, ..., V_m of T mapping to the vertices of T'."""
        return [
            tuple(v for v, w in enumerate(self.vertex_map) if w == i)
            for i in range(self.target.n_vertices)
        ]


def _find(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def contract(t: ColoredTree, contracted: tuple[int, ...]) -> SmoothingStructure | None:
    """
    Contract the given edges of t.

    Returns:
        SmoothingStructure | None: The structure, or None if a fiber mixes colors.
    """
    parent = list(range(t.n_vertices))
    for index in contracted:
        a, b = t.edges[index]
        parent[_find(parent, a)] = _find(parent, b)
    roots = sorted({_find(parent, v) for v in range(t.n_vertices)}, key=lambda r: min(
        v for v in range(t.n_vertices) if _find(parent, v) == r
    ))
    position = {r: i for i, r in enumerate(roots)}
    vertex_map = tuple(position[_find(parent, v)] for v in range(t.n_vertices))
    genera = [0] * len(roots)
    colors: list[int | None] = [None] * len(roots)
    for v, w in enumerate(vertex_map):
        genera[w] += t.genera[v]
        color = t.colors[v]
        if color is not None:
            if colors[w] is not None and colors[w] != color:
                return None
            colors[w] = color
    kept = [i for i in range(t.n_edges) if i not in set(contracted)]
    edges = tuple(
        tuple(sorted((vertex_map[t.edges[i][0]], vertex_map[t.edges[i][1]]))) for i in kept
    )
    target = ColoredTree(tuple(genera), tuple(colors), edges)  # type: ignore[arg-type]
    return SmoothingStructure(t, target, vertex_map, tuple(sorted(contracted)), tuple(kept))


def smoothings(t: ColoredTree, logger: Logger | None = None) -> list[SmoothingStructure]:
    """
    All nontrivial smoothing structures on t.

    The search runs over edge subsets with union-find pruning: an edge joining fibers of
    different colors is never contracted. Each surviving subset is kept if the contracted
    tree is a stable colored extremal tree for the same partition.

    Args:
        t (ColoredTree): A colored extremal tree.
        logger (Logger | None): Debug logger.

    Returns:
        list[SmoothingStructure]: Structures ordered by contracted edge set.
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    mu = t.partition
    result: list[SmoothingStructure] = []

    def fiber_colors(chosen: list[int]) -> bool:
        parent = list(range(t.n_vertices))
        color: dict[int, int] = {}
        for v, c in enumerate(t.colors):
            if c is not None:
                color[v] = c
        for index in chosen:
            a, b = (_find(parent, x) for x in t.edges[index])
            ca, cb = color.get(a), color.get(b)
            if ca is not None and cb is not None and ca != cb:
                return False
            parent[a] = b
            if ca is not None:
                color[b] = ca
        return True

    def search(index: int, chosen: list[int]) -> None:
        if index == t.n_edges:
            if not chosen:
                return
            structure = contract(t, tuple(chosen))
            if structure is not None and is_extremal(structure.target, mu):
                result.append(structure)
            return
        search(index + 1, chosen)
        chosen.append(index)
        if fiber_colors(chosen):
            search(index + 1, chosen)
        chosen.pop()

    search(0, [])
    result.sort(key=lambda s: (len(s.contracted), s.contracted))
    logger.debug("Tree with %d edges: %d smoothing structures", t.n_edges, len(result))
    return result


def minimal_smoothings(t: ColoredTree) -> list[SmoothingStructure]:
    """Smoothings whose contracted set contains no smaller valid contracted set."""
    every = smoothings(t)
    sets = [set(s.contracted) for s in every]
    return [
        s
        for s, chosen in zip(every, sets)
        if not any(other < chosen for other in sets)
    ]


def compose(first: SmoothingStructure, second: SmoothingStructure) -> SmoothingStructure:
    """
    Composite T -> T' -> T'' of two structures, `second` defined on `first.target`.
    """
    if second.source != first.target:
        raise ValueError("Second structure must start at the target of the first")
    contracted = tuple(
        sorted(set(first.contracted) | {first.edge_map[e] for e in second.contracted})
    )
    vertex_map = tuple(second.vertex_map[w] for w in first.vertex_map)
    edge_map = tuple(first.edge_map[e] for e in second.edge_map)
    return SmoothingStructure(first.source, second.target, vertex_map, contracted, edge_map)


def is_composite_of_minimal(structure: SmoothingStructure) -> bool:
    """
    True if the structure is minimal or factors as a minimal structure followed by a
    smoothing of its target which is itself such a composite.
    """
    chosen = set(structure.contracted)
    for first in minimal_smoothings(structure.source):
        if set(first.contracted) == chosen:
            return True
        if not set(first.contracted) < chosen:
            continue
        inverse = {e: i for i, e in enumerate(first.edge_map)}
        remaining = tuple(sorted(inverse[e] for e in chosen - set(first.contracted)))
        rest = contract(first.target, remaining)
        if rest is None or not is_extremal(rest.target, structure.source.partition):
            continue
        if compose(first, rest).contracted == structure.contracted and is_composite_of_minimal(
            rest
        ):
            return True
    return False


def local_equations(t: ColoredTree) -> list[PolyElement]:
    """
    Local equations of the fiber product at the stratum of t: one squarefree monomial
    prod_{e in P} z_e per critical path P, in the ring of the edge variables.
    """
    labels = edge_labels(t)
    r = poly_ring(tuple(labels))
    monomials = []
    for path in critical_paths(t):
        exponents = tuple(1 if i in path.edges else 0 for i in range(t.n_edges))
        monomial = r.from_dict({exponents: r.domain.one})
        if monomial not in monomials:
            monomials.append(monomial)
    return monomials
