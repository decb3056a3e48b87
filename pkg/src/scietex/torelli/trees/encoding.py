"""
Canonical encodings and canonical forms of colored trees.

The encoding roots the tree at its centroid; with two centroids the smaller of the two rooted
encodings wins. Children are sorted by (genus, color, encoding). Equal encodings hold exactly
for isomorphic trees, isomorphisms preserving genus and color.
"""

from collections import deque

from .colored_tree import ColoredTree


def _label(t: ColoredTree, v: int) -> tuple[int, int]:
    color = t.colors[v]
    return t.genera[v], 0 if color is None else color


def _rooted(t: ColoredTree, root: int, parent: int | None = None) -> str:
    children = sorted(
        (_label(t, w), _rooted(t, w, root)) for w in t.adjacency[root] if w != parent
    )
    genus, color = _label(t, root)
    return f"({genus},{color}" + "".join(enc for _, enc in children) + ")"


def centroids(t: ColoredTree) -> list[int]:
    """The one or two vertices minimizing the largest remaining component."""
    n = t.n_vertices
    if n == 1:
        return [0]
    order: list[int] = []
    parent = [-1] * n
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in t.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                queue.append(w)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    heaviest = []
    for v in range(n):
        parts = [size[w] for w in t.adjacency[v] if parent[w] == v]
        parts.append(n - size[v])
        heaviest.append(max(parts))
    best = min(heaviest)
    return [v for v in range(n) if heaviest[v] == best]


def canonical_root(t: ColoredTree) -> tuple[int, str]:
    """Canonical root vertex and the encoding rooted there."""
    return min(((v, _rooted(t, v)) for v in centroids(t)), key=lambda x: (x[1], x[0]))


def canonical_encode(t: ColoredTree) -> bytes:
    """
    Isomorphism-invariant encoding of a tree.

    Returns:
        bytes: ASCII encoding such as b"(0,0(1,1)(1,1)(4,2))".
    """
    return canonical_root(t)[1].encode("ascii")


def encoding_text(t: ColoredTree) -> str:
    """`canonical_encode` as text."""
    return canonical_root(t)[1]


def _side_encodings(t: ColoredTree, a: int, b: int) -> tuple[str, str]:
    first, second = _rooted(t, a, b), _rooted(t, b, a)
    return (first, second) if first >= second else (second, first)


def edge_order_key(t: ColoredTree, index: int) -> tuple[str, str]:
    """
    Sort key of an edge: the encodings of the two halves obtained by cutting it,
    larger first. Equal keys only occur for edges exchanged by an automorphism.
    """
    a, b = t.edges[index]
    return _side_encodings(t, a, b)


def canonical_form(t: ColoredTree) -> ColoredTree:
    """
    Isomorphic copy with canonical vertex and edge order.

    Vertices are numbered breadth first from the canonical root, children in canonical order.
    Edges are sorted by `edge_order_key`, ties by vertex numbers; edge i carries the label
    z_{i+1}.
    """
    root, _ = canonical_root(t)
    order = [root]
    parent = {root: -1}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        children = sorted(
            (w for w in t.adjacency[v] if w != parent[v]),
            key=lambda w: (_label(t, w), _rooted(t, w, v)),
        )
        for w in children:
            parent[w] = v
            order.append(w)
            queue.append(w)
    relabel = {old: new for new, old in enumerate(order)}
    genera = tuple(t.genera[old] for old in order)
    colors = tuple(t.colors[old] for old in order)
    edges = [tuple(sorted((relabel[a], relabel[b]))) for a, b in t.edges]
    relabeled = ColoredTree(genera, colors, tuple(edges))  # type: ignore[arg-type]
    ordered = sorted(
        range(len(edges)), key=lambda i: (edge_order_key(relabeled, i), relabeled.edges[i])
    )
    return ColoredTree(genera, colors, tuple(relabeled.edges[i] for i in ordered))


def edge_labels(t: ColoredTree) -> list[str]:
    """Names z1, ..., z|E| of the edges in stored order."""
    return [f"z{i + 1}" for i in range(t.n_edges)]
