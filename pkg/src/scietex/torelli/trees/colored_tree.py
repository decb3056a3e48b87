"""
Partitions and colored stable trees.

A `ColoredTree` stores per-vertex genus and color (1-based part index, None for genus 0) and
an edge list. Colors are positional: color i refers to part i of the partition, so two parts
of equal size still give distinct colors.
"""

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Sequence

import networkx as nx

from .exceptions import InvalidPartition, InvalidTree


@dataclass(frozen=True)
class Partition:
    """
    Ordered partition mu = (g_1, ..., g_k) of g.

    Attributes:
        parts (tuple[int, ...]): Positive parts; their order fixes the color names.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise InvalidPartition("Partition must have at least one part")
        if any((not isinstance(p, int)) or p < 1 for p in self.parts):
            raise InvalidPartition(f"Partition parts must be positive integers: {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a comma list such as "2,4"."""
        try:
            parts = tuple(int(x) for x in text.split(",") if x.strip())
        except ValueError as exc:
            raise InvalidPartition(f"Cannot parse partition {text!r}") from exc
        return cls(parts)

    @property
    def total(self) -> int:
        """g = sum of parts."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of parts k."""
        return len(self.parts)

    @property
    def codimension(self) -> int:
        """d = sum_{i<j} g_i g_j."""
        return sum(
            self.parts[i] * self.parts[j]
            for i in range(self.length)
            for j in range(i + 1, self.length)
        )

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class CriticalPath:
    """
    Path between positive-genus vertices of different colors through genus-0 vertices.

    Attributes:
        endpoints (tuple[int, int]): The two positive-genus vertices, smaller index first.
        edges (tuple[int, ...]): Sorted edge indices of the path.
    """

    endpoints: tuple[int, int]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class ColoredTree:
    """
    Genus-labeled, color-labeled tree.

    Attributes:
        genera (tuple[int, ...]): Genus per vertex.
        colors (tuple[int | None, ...]): Color per vertex, None exactly for genus 0.
        edges (tuple[tuple[int, int], ...]): Edges as (smaller, larger) vertex pairs.
    """

    genera: tuple[int, ...]
    colors: tuple[int | None, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n_vertices(self) -> int:
        """|V|."""
        return len(self.genera)

    @property
    def n_edges(self) -> int:
        """|E|."""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor lists."""
        neighbors: list[list[int]] = [[] for _ in self.genera]
        for a, b in self.edges:
            neighbors[a].append(b)
            neighbors[b].append(a)
        return tuple(tuple(sorted(n)) for n in neighbors)

    @cached_property
    def edge_index(self) -> dict[frozenset[int], int]:
        """Map from endpoint set to edge index."""
        return {frozenset(e): i for i, e in enumerate(self.edges)}

    def valence(self, v: int) -> int:
        """n(v), the number of edges at v."""
        return len(self.adjacency[v])

    @property
    def positive_vertices(self) -> tuple[int, ...]:
        """Vertices of positive genus."""
        return tuple(v for v, g in enumerate(self.genera) if g > 0)

    @property
    def zero_vertices(self) -> tuple[int, ...]:
        """Vertices of genus 0."""
        return tuple(v for v, g in enumerate(self.genera) if g == 0)

    @property
    def partition(self) -> Partition:
        """Per-color genus sums, read back as a partition."""
        k = max(c for c in self.colors if c is not None)
        return Partition(
            tuple(
                sum(g for g, c in zip(self.genera, self.colors) if c == i)
                for i in range(1, k + 1)
            )
        )

    def graph(self) -> nx.Graph:
        """The tree as a networkx graph with `genus` and `color` node attributes."""
        graph = nx.Graph()
        for v, (g, c) in enumerate(zip(self.genera, self.colors)):
            graph.add_node(v, genus=g, color=c)
        graph.add_edges_from(self.edges)
        return graph


def critical_paths(t: ColoredTree) -> list[CriticalPath]:
    """
    All critical paths of a tree.

    A critical path joins two positive-genus vertices of different colors and has only
    genus-0 interior vertices.

    Args:
        t (ColoredTree): Tree.

    Returns:
        list[CriticalPath]: Paths ordered by endpoints.
    """
    paths = []
    for u in t.positive_vertices:
        stack = [(w, u, (t.edge_index[frozenset((u, w))],)) for w in t.adjacency[u]]
        while stack:
            v, parent, path = stack.pop()
            if t.genera[v] > 0:
                if u < v and t.colors[v] != t.colors[u]:
                    paths.append(CriticalPath((u, v), tuple(sorted(path))))
                continue
            for w in t.adjacency[v]:
                if w != parent:
                    stack.append((w, v, path + (t.edge_index[frozenset((v, w))],)))
    return sorted(paths, key=lambda p: (p.endpoints, p.edges))


def covers_all_edges(t: ColoredTree) -> bool:
    """True if every edge lies on some critical path."""
    covered: set[int] = set()
    for path in critical_paths(t):
        covered.update(path.edges)
    return len(covered) == t.n_edges


def is_stable(t: ColoredTree) -> bool:
    """2 g(v) - 2 + n(v) > 0 for every vertex (a lone vertex of positive genus counts)."""
    if t.n_vertices == 1:
        return t.genera[0] > 0
    return all(2 * g - 2 + t.valence(v) > 0 for v, g in enumerate(t.genera))


def is_irreducible(t: ColoredTree) -> bool:
    """True if no vertex has genus 0."""
    return all(g > 0 for g in t.genera)


def dimension(t: ColoredTree) -> int:
    """dim M_T^ct = sum_v (3 g(v) - 3 + n(v))."""
    return sum(3 * g - 3 + t.valence(v) for v, g in enumerate(t.genera))


def validate_tree(t: ColoredTree, mu: Partition | None = None) -> None:
    """
    Check the colored extremal tree conditions.

    Args:
        t (ColoredTree): Tree to check.
        mu (Partition | None): Expected partition; only internal consistency when None.

    Raises:
        InvalidTree: On the first violated condition.
    """
    if len(t.colors) != t.n_vertices or t.n_vertices == 0:
        raise InvalidTree("Vertex data is inconsistent")
    if any(a == b or not 0 <= a < t.n_vertices or not 0 <= b < t.n_vertices for a, b in t.edges):
        raise InvalidTree(f"Bad edge list {t.edges}")
    if t.n_vertices > 1 and not nx.is_tree(t.graph()):
        raise InvalidTree("Edges do not form a tree")
    for v, (g, c) in enumerate(zip(t.genera, t.colors)):
        if g < 0:
            raise InvalidTree(f"Vertex {v} has negative genus")
        if (g > 0) != (c is not None):
            raise InvalidTree(f"Vertex {v}: color must be set exactly for positive genus")
    if mu is not None:
        if any(c is not None and not 1 <= c <= mu.length for c in t.colors):
            raise InvalidTree(f"Colors out of range for partition {mu}")
        if t.partition.parts != mu.parts:
            raise InvalidTree(f"Genus sums {t.partition.parts} differ from {mu.parts}")
    if not is_stable(t):
        raise InvalidTree("Tree is not stable")
    if not covers_all_edges(t):
        raise InvalidTree("Some edge lies on no critical path")


def is_extremal(t: ColoredTree, mu: Partition | None = None) -> bool:
    """True if `validate_tree` passes."""
    try:
        validate_tree(t, mu)
    except InvalidTree:
        return False
    return True


def tree_to_dict(t: ColoredTree, encoding: str | None = None) -> dict[str, Any]:
    """JSON-ready dictionary of a tree."""
    data: dict[str, Any] = {
        "vertices": [{"genus": g, "color": c} for g, c in zip(t.genera, t.colors)],
        "edges": [list(e) for e in t.edges],
    }
    if encoding is not None:
        data["encoding"] = encoding
    return data


def tree_from_dict(data: dict[str, Any]) -> ColoredTree:
    """Inverse of `tree_to_dict`; the encoding field is ignored."""
    try:
        genera = tuple(int(v["genus"]) for v in data["vertices"])
        colors = tuple(
            None if v.get("color") is None else int(v["color"]) for v in data["vertices"]
        )
        edges = tuple(tuple(sorted((int(a), int(b)))) for a, b in data["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidTree(f"Malformed tree data: {exc}") from exc
    return ColoredTree(genera, colors, edges)  # type: ignore[arg-type]


def tree_to_json(t: ColoredTree, encoding: str | None = None) -> str:
    """Compact JSON text of a tree."""
    return json.dumps(tree_to_dict(t, encoding), separators=(",", ":"))


def tree_from_json(text: str) -> ColoredTree:
    """Parse JSON text produced by `tree_to_json`."""
    return tree_from_dict(json.loads(text))


def make_tree(
    vertices: Sequence[tuple[int, int | None]], edges: Sequence[tuple[int, int]]
) -> ColoredTree:
    """Build a tree from (genus, color) pairs and edge pairs."""
    return ColoredTree(
        tuple(g for g, _ in vertices),
        tuple(c for _, c in vertices),
        tuple(tuple(sorted(e)) for e in edges),  # type: ignore[misc]
    )
