"""
Local model of the excess intersection at the stratum of a colored extremal tree.

The normal bundle N is modeled as O^c plus d - c line bundles with roots l_1, ..., l_{d-c}:

    c(N) = prod_i (1 + l_i) * prod_P (1 + sum_{e in P} z_e),

the second product running over the c critical paths P. Three rings serve the model:

- the root ring (z_1, ..., z_E, l_1, ..., l_{d-c}),
- the elementary ring (z_1, ..., z_E, e_1, ..., e_{d-c}), e_j the elementary symmetric
  polynomials of the roots, deg e_j = j,
- the Chern ring (z_1, ..., z_E, c_1, ..., c_{d-c}), c_i = c_i(N), deg c_i = i.
"""

from dataclasses import dataclass
from functools import cached_property

from sympy.polys.rings import PolyElement, PolyRing

from ..algebra import elementary_polynomials, gen, graded_piece, poly_ring
from ..trees import ColoredTree, CriticalPath, Partition, critical_paths, edge_labels
from ..trees.exceptions import InvalidTree


@dataclass(frozen=True)
class LocalModel:
    """
    Local model of a tree.

    Attributes:
        tree (ColoredTree): The tree; its stored edge order names z_1, ..., z_E.
        d (int): Codimension sum_{i<j} g_i g_j.
        paths (tuple[CriticalPath, ...]): The critical paths.
    """

    tree: ColoredTree
    d: int
    paths: tuple[CriticalPath, ...]

    @property
    def c(self) -> int:
        """Number of critical paths."""
        return len(self.paths)

    @property
    def rank(self) -> int:
        """d - c, the number of nontrivial line bundles."""
        return self.d - self.c

    @property
    def edge_vars(self) -> tuple[str, ...]:
        """z_1, ..., z_E."""
        return tuple(edge_labels(self.tree))

    @property
    def root_vars(self) -> tuple[str, ...]:
        """l_1, ..., l_{d-c}."""
        return tuple(f"l{i + 1}" for i in range(self.rank))

    @property
    def elementary_vars(self) -> tuple[str, ...]:
        """e_1, ..., e_{d-c}."""
        return tuple(f"e{i + 1}" for i in range(self.rank))

    @property
    def chern_vars(self) -> tuple[str, ...]:
        """c_1, ..., c_{d-c}."""
        return tuple(f"c{i + 1}" for i in range(self.rank))

    @property
    def root_ring(self) -> PolyRing:
        """Ring of the root representation."""
        return poly_ring(self.edge_vars + self.root_vars)

    @property
    def elementary_ring(self) -> PolyRing:
        """Ring of the elementary representation."""
        return poly_ring(self.edge_vars + self.elementary_vars)

    @property
    def chern_ring(self) -> PolyRing:
        """Ring of the Chern representation."""
        return poly_ring(self.edge_vars + self.chern_vars)

    @property
    def root_weights(self) -> tuple[int, ...]:
        """All variables of the root ring have degree 1."""
        return (1,) * (self.tree.n_edges + self.rank)

    @property
    def weights(self) -> tuple[int, ...]:
        """Degrees of the elementary and Chern ring variables."""
        return (1,) * self.tree.n_edges + tuple(range(1, self.rank + 1))

    def path_sums(self, r: PolyRing) -> list[PolyElement]:
        """sum_{e in P} z_e per critical path, in a ring containing the edge variables."""
        return [
            sum((gen(r, f"z{e + 1}") for e in path.edges), r.zero) for path in self.paths
        ]

    def path_factor(self, r: PolyRing) -> PolyElement:
        """Q = prod_P (1 + sum_{e in P} z_e)."""
        result = r.one
        for s in self.path_sums(r):
            result *= r.one + s
        return result

    @cached_property
    def chern_total(self) -> PolyElement:
        """c(N) in the root ring."""
        r = self.root_ring
        result = self.path_factor(r)
        for name in self.root_vars:
            result *= r.one + gen(r, name)
        return result

    def root_chern_classes(self) -> list[PolyElement]:
        """[c(N)]_i in the root ring for i = 0..d."""
        return [graded_piece(self.chern_total, i) for i in range(self.d + 1)]

    def root_elementary(self) -> list[PolyElement]:
        """e_1, ..., e_{d-c} of the roots, in the root ring."""
        return elementary_polynomials(self.root_ring, self.root_vars)

    @cached_property
    def chern_classes(self) -> tuple[PolyElement, ...]:
        """
        c_0(N), ..., c_d(N) in the elementary ring: the graded pieces of
        (1 + e_1 + ... + e_{d-c}) * Q.
        """
        r = self.elementary_ring
        total = r.one
        for name in self.elementary_vars:
            total += gen(r, name)
        total *= self.path_factor(r)
        return tuple(graded_piece(total, i, self.weights) for i in range(self.d + 1))

    def top_class(self) -> PolyElement:
        """c_d(N) = e_{d-c} * prod_P sum_{e in P} z_e, in the elementary ring."""
        r = self.elementary_ring
        result = gen(r, self.elementary_vars[-1]) if self.rank else r.one
        for s in self.path_sums(r):
            result *= s
        return result


def local_model(t: ColoredTree, mu: Partition | None = None) -> LocalModel:
    """
    Build the local model of a tree.

    Args:
        t (ColoredTree): Colored extremal tree.
        mu (Partition | None): Expected partition, read from the colors when None.

    Raises:
        InvalidTree: If the colors do not match `mu` or there are more critical paths than
            the codimension.

    Returns:
        LocalModel: The model.
    """
    if mu is None:
        mu = t.partition
    elif t.partition.parts != mu.parts:
        raise InvalidTree(f"Tree has partition {t.partition}, expected {mu}")
    paths = tuple(critical_paths(t))
    if len(paths) > mu.codimension:
        raise InvalidTree(
            f"Tree has {len(paths)} critical paths, more than the codimension {mu.codimension}"
        )
    return LocalModel(t, mu.codimension, paths)
