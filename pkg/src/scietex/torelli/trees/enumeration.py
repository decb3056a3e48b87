"""
Enumeration of mu-colored extremal trees.

Tree shapes come from networkx's generator of non-isomorphic free trees, taken in increasing
vertex count. For each shape the labeling is searched in three stages:

1. choose the genus-0 vertices among vertices of valence >= 3 (leaves and valence-2 vertices
   must have positive genus for stability);
2. color the positive vertices so that neighbors differ, respecting each part's budget, and
   keep colorings whose critical paths cover all edges;
3. split each part g_i into positive genera over the vertices of color i.

Candidates are deduplicated by canonical encoding. Shards by vertex count run in a process
pool when more than one worker is configured.
"""

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, product
from logging import Logger, getLogger
from typing import Iterator

import networkx as nx

from ..config import ComputeConfigModel, resolve_config
from .colored_tree import ColoredTree, Partition, covers_all_edges
from .encoding import canonical_form, encoding_text


def vertex_count_bound(mu: Partition, max_edges: int | None = None) -> int:
    """
    Largest possible vertex count of a mu-colored extremal tree.

    At most g vertices have positive genus and every genus-0 vertex has valence >= 3, so
    there are at most two fewer genus-0 vertices than positive ones.
    """
    edges = mu.codimension if max_edges is None else max_edges
    return min(edges + 1, 2 * mu.total - 2)


def _colorings(
    positive: list[int], adjacency: list[list[int]], parts: tuple[int, ...]
) -> Iterator[dict[int, int]]:
    is_positive = set(positive)
    budget = list(parts)
    used = [0] * len(parts)
    assignment: dict[int, int] = {}

    def search(i: int) -> Iterator[dict[int, int]]:
        unused = sum(1 for u in used if u == 0)
        if len(positive) - i < unused:
            return
        if i == len(positive):
            yield dict(assignment)
            return
        v = positive[i]
        for color in range(len(parts)):
            if used[color] >= budget[color]:
                continue
            if any(
                w in is_positive and assignment.get(w) == color + 1 for w in adjacency[v]
            ):
                continue
            assignment[v] = color + 1
            used[color] += 1
            yield from search(i + 1)
            used[color] -= 1
            del assignment[v]

    yield from search(0)


def _compositions(total: int, count: int) -> Iterator[tuple[int, ...]]:
    for cuts in combinations(range(1, total), count - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(count))


def _genus_assignments(
    coloring: dict[int, int], parts: tuple[int, ...]
) -> Iterator[dict[int, int]]:
    groups = [sorted(v for v, c in coloring.items() if c == i + 1) for i in range(len(parts))]
    for choice in product(
        *(_compositions(parts[i], len(groups[i])) for i in range(len(parts)))
    ):
        genera = {}
        for group, values in zip(groups, choice):
            genera.update(zip(group, values))
        yield genera


def trees_of_order(parts: tuple[int, ...], n: int) -> dict[str, ColoredTree]:
    """
    All mu-colored extremal trees with exactly n vertices, keyed by encoding.

    Args:
        parts (tuple[int, ...]): Partition parts.
        n (int): Vertex count, n >= 2.

    Returns:
        dict[str, ColoredTree]: Canonical forms by canonical encoding.
    """
    g, k = sum(parts), len(parts)
    found: dict[str, ColoredTree] = {}
    for shape in nx.nonisomorphic_trees(n):
        adjacency = [sorted(shape.neighbors(v)) for v in range(n)]
        edges = tuple(sorted(tuple(sorted(e)) for e in shape.edges()))
        branching = [v for v in range(n) if len(adjacency[v]) >= 3]
        for zero_count in range(max(0, n - g), min(len(branching), n - k) + 1):
            for zero_set in combinations(branching, zero_count):
                positive = [v for v in range(n) if v not in zero_set]
                for coloring in _colorings(positive, adjacency, parts):
                    colors = tuple(coloring.get(v) for v in range(n))
                    skeleton = ColoredTree(
                        tuple(1 if v in coloring else 0 for v in range(n)),
                        colors,
                        edges,  # type: ignore[arg-type]
                    )
                    if not covers_all_edges(skeleton):
                        continue
                    for genera in _genus_assignments(coloring, parts):
                        tree = canonical_form(
                            ColoredTree(
                                tuple(genera.get(v, 0) for v in range(n)),
                                colors,
                                edges,  # type: ignore[arg-type]
                            )
                        )
                        found.setdefault(encoding_text(tree), tree)
    return found


def _shard(args: tuple[tuple[int, ...], int]) -> dict[str, ColoredTree]:
    return trees_of_order(*args)


def enumerate_trees(
    mu: Partition,
    max_edges: int | None = None,
    config: ComputeConfigModel | None = None,
    logger: Logger | None = None,
) -> list[ColoredTree]:
    """
    One representative per isomorphism class of mu-colored extremal trees.

    Args:
        mu (Partition): The partition.
        max_edges (int | None): Edge bound, the codimension d by default.
        config (ComputeConfigModel | None): Supplies the worker count.
        logger (Logger | None): Progress logger.

    Returns:
        list[ColoredTree]: Canonical forms ordered by (vertex count, encoding).
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    cfg = resolve_config(config)
    if mu.length == 1:
        return [ColoredTree((mu.total,), (1,), ())]
    bound = vertex_count_bound(mu, max_edges)
    jobs = [(mu.parts, n) for n in range(2, bound + 1)]
    found: dict[str, ColoredTree] = {}
    if cfg.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(cfg.threads, len(jobs))) as pool:
            shards = list(pool.map(_shard, jobs))
    else:
        shards = [_shard(job) for job in jobs]
    for (_, n), shard in zip(jobs, shards):
        logger.debug("Partition %s: %d trees with %d vertices", mu, len(shard), n)
        found.update(shard)
    trees = sorted(found.items(), key=lambda item: (item[1].n_vertices, item[0]))
    logger.info("Partition %s: %d colored extremal trees", mu, len(trees))
    return [tree for _, tree in trees]
