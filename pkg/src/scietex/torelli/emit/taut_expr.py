"""
Tautological expressions on the compact-type moduli space M_{g,n}^ct.

A `TautExpr` is a linear combination of decorated stable trees. Each `DecoratedGraphTerm`
carries a rational coefficient, a `StableTree` and a decoration monomial. The decoration is a
sorted tuple of (symbol, exponent) pairs with symbols

- ``psi<h>``: cotangent class at leg h (a marking or a half-edge),
- ``lam<i>v<v>``: lambda_i of the vertex moduli space of vertex v,
- ``kap<i>v<v>``: kappa_i of vertex v.

Legs 1..n are the markings; half-edges carry labels above n. Expressions are kept in normal
form: identical (graph, decoration) pairs are merged, zero coefficients and decorations above
the dimension of a vertex are dropped, and terms are sorted.
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from sympy.polys.rings import PolyElement

from ..algebra import ring_names, to_fraction
from .exceptions import AmbientMismatch

Decoration = tuple[tuple[str, int], ...]

_SYMBOL = re.compile(r"^(?:psi(?P<leg>\d+)|(?P<kind>lam|kap)(?P<index>\d+)v(?P<vertex>\d+))$")


@dataclass(frozen=True)
class StableTree:
    """
    Stable graph of compact type.

    Attributes:
        genera (tuple[int, ...]): Genus per vertex.
        legs (tuple[tuple[int, ...], ...]): Leg labels per vertex (markings and half-edges).
        edges (tuple[tuple[int, int], ...]): Edges as pairs of half-edge labels.
    """

    genera: tuple[int, ...]
    legs: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...] = ()

    @classmethod
    def trivial(cls, g: int, n: int = 0) -> "StableTree":
        """Single vertex of genus g carrying the markings 1..n."""
        return cls((g,), (tuple(range(1, n + 1)),))

    @classmethod
    def divisor(cls, g: int, h: int, subset: Iterable[int], n: int) -> "StableTree":
        """
        Boundary divisor delta_{h,S}: genus h with markings S glued to genus g-h with the rest.
        """
        chosen = tuple(sorted(subset))
        rest = tuple(i for i in range(1, n + 1) if i not in chosen)
        return cls((h, g - h), (chosen + (n + 1,), rest + (n + 2,)), ((n + 1, n + 2),))

    @property
    def genus(self) -> int:
        """Arithmetic genus; trees have no loops."""
        return sum(self.genera)

    @property
    def n_markings(self) -> int:
        """Number of legs not used by edges."""
        half_edges = {h for edge in self.edges for h in edge}
        return sum(1 for legs in self.legs for h in legs if h not in half_edges)

    def vertex_of(self, leg: int) -> int:
        """Vertex carrying a leg."""
        for v, legs in enumerate(self.legs):
            if leg in legs:
                return v
        raise KeyError(f"Leg {leg} is not in the graph")

    def valence(self, v: int) -> int:
        """Number of legs at v, half-edges and markings together."""
        return len(self.legs[v])

    def vertex_dimension(self, v: int) -> int:
        """dim M_{g(v), n(v)} = 3 g(v) - 3 + n(v)."""
        return 3 * self.genera[v] - 3 + self.valence(v)

    def dimension(self) -> int:
        """Dimension of the stratum, the sum of the vertex dimensions."""
        return sum(self.vertex_dimension(v) for v in range(len(self.genera)))

    def is_stable(self) -> bool:
        """2 g(v) - 2 + n(v) > 0 at every vertex."""
        return all(2 * g - 2 + len(legs) > 0 for g, legs in zip(self.genera, self.legs))

    def sort_key(self) -> tuple:
        """Deterministic ordering key."""
        return (len(self.genera), self.genera, self.legs, self.edges)

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready dictionary."""
        return {
            "genera": list(self.genera),
            "legs": [list(legs) for legs in self.legs],
            "edges": [list(edge) for edge in self.edges],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "StableTree":
        """Inverse of `to_dict`."""
        return cls(
            tuple(int(g) for g in data["genera"]),
            tuple(tuple(int(h) for h in legs) for legs in data["legs"]),
            tuple((int(a), int(b)) for a, b in data.get("edges", [])),
        )


def parse_symbol(symbol: str) -> tuple[str, int, int]:
    """
    Split a decoration symbol.

    Returns:
        tuple[str, int, int]: ("psi", leg, 1), ("lam", vertex, i) or ("kap", vertex, i).
    """
    match = _SYMBOL.match(symbol)
    if match is None:
        raise ValueError(f"Unknown decoration symbol {symbol!r}")
    if match.group("leg") is not None:
        return "psi", int(match.group("leg")), 1
    return match.group("kind"), int(match.group("vertex")), int(match.group("index"))


def symbol_degree(symbol: str) -> int:
    """Cohomological degree of a decoration symbol."""
    return parse_symbol(symbol)[2]


def _vertex_degrees(graph: StableTree, decoration: Decoration) -> list[int]:
    degrees = [0] * len(graph.genera)
    for symbol, exponent in decoration:
        kind, where, index = parse_symbol(symbol)
        vertex = graph.vertex_of(where) if kind == "psi" else where
        degrees[vertex] += index * exponent
    return degrees


def _vanishes(graph: StableTree, decoration: Decoration) -> bool:
    for symbol, _ in decoration:
        kind, where, index = parse_symbol(symbol)
        if kind == "lam" and index > graph.genera[where]:
            return True
    degrees = _vertex_degrees(graph, decoration)
    return any(deg > graph.vertex_dimension(v) for v, deg in enumerate(degrees))


def normalize_decoration(factors: Iterable[tuple[str, int]]) -> Decoration:
    """Merge repeated symbols and sort; zero exponents are dropped."""
    merged: dict[str, int] = {}
    for symbol, exponent in factors:
        merged[symbol] = merged.get(symbol, 0) + exponent
    return tuple(sorted((s, e) for s, e in merged.items() if e))


@dataclass(frozen=True)
class DecoratedGraphTerm:
    """
    Coefficient times the pushforward of a decoration from a stratum.

    Attributes:
        coefficient (Fraction): Rational coefficient.
        graph (StableTree): The stratum.
        decoration (Decoration): Monomial in psi, lambda and kappa symbols.
    """

    coefficient: Fraction
    graph: StableTree
    decoration: Decoration = ()

    def degree(self) -> int:
        """Codimension: edge count plus decoration degree."""
        return len(self.graph.edges) + sum(
            symbol_degree(s) * e for s, e in self.decoration
        )

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready dictionary."""
        return {
            "coefficient": str(self.coefficient),
            "graph": self.graph.to_dict(),
            "decoration": [[s, e] for s, e in self.decoration],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "DecoratedGraphTerm":
        """Inverse of `to_dict`."""
        return cls(
            Fraction(data["coefficient"]),
            StableTree.from_dict(data["graph"]),
            normalize_decoration((str(s), int(e)) for s, e in data.get("decoration", [])),
        )


@dataclass(frozen=True)
class TautExpr:
    """
    Linear combination of decorated graph terms on M_{g,n}^ct, in normal form.

    Build instances with `TautExpr.build` so that the normal form holds.

    Attributes:
        g (int): Genus of the ambient space.
        n (int): Number of markings.
        terms (tuple[DecoratedGraphTerm, ...]): Merged, sorted, nonzero terms.
    """

    g: int
    n: int
    terms: tuple[DecoratedGraphTerm, ...] = field(default=())

    @classmethod
    def build(cls, g: int, n: int, terms: Iterable[DecoratedGraphTerm]) -> "TautExpr":
        """Normal form of a term list."""
        merged: dict[tuple[StableTree, Decoration], Fraction] = {}
        for term in terms:
            if term.graph.genus != g or term.graph.n_markings != n:
                raise AmbientMismatch(
                    f"Term graph has (g, n) = ({term.graph.genus}, {term.graph.n_markings}),"
                    f" expected ({g}, {n})"
                )
            if not term.coefficient or _vanishes(term.graph, term.decoration):
                continue
            key = (term.graph, term.decoration)
            merged[key] = merged.get(key, Fraction(0)) + term.coefficient
        ordered = sorted(
            ((key, c) for key, c in merged.items() if c),
            key=lambda item: (item[0][0].sort_key(), item[0][1]),
        )
        return cls(
            g, n, tuple(DecoratedGraphTerm(c, graph, dec) for (graph, dec), c in ordered)
        )

    @classmethod
    def zero(cls, g: int, n: int = 0) -> "TautExpr":
        """The zero class."""
        return cls(g, n, ())

    @classmethod
    def from_polynomial(
        cls,
        g: int,
        n: int,
        graph: StableTree,
        p: PolyElement,
        coefficient: Any = 1,
    ) -> "TautExpr":
        """
        Expression coefficient * p on a single stratum.

        Args:
            g (int): Ambient genus.
            n (int): Ambient marking count.
            graph (StableTree): Stratum.
            p (PolyElement): Polynomial whose variable names are decoration symbols.
            coefficient (Any): Rational factor.
        """
        scale = to_fraction(coefficient)
        names = ring_names(p.ring)
        terms = []
        for monom, coeff in p.terms():
            decoration = normalize_decoration(zip(names, monom))
            terms.append(DecoratedGraphTerm(scale * to_fraction(coeff), graph, decoration))
        return cls.build(g, n, terms)

    def _check(self, other: "TautExpr") -> None:
        if (self.g, self.n) != (other.g, other.n):
            raise AmbientMismatch(
                f"Cannot combine expressions on ({self.g}, {self.n}) and ({other.g}, {other.n})"
            )

    def __add__(self, other: "TautExpr") -> "TautExpr":
        self._check(other)
        return TautExpr.build(self.g, self.n, self.terms + other.terms)

    def __sub__(self, other: "TautExpr") -> "TautExpr":
        return self + other.scale(-1)

    def scale(self, factor: Any) -> "TautExpr":
        """Multiply every coefficient by a rational."""
        value = to_fraction(factor)
        return TautExpr.build(
            self.g,
            self.n,
            (DecoratedGraphTerm(value * t.coefficient, t.graph, t.decoration) for t in self.terms),
        )

    def __rmul__(self, factor: Any) -> "TautExpr":
        return self.scale(factor)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        """True for the empty combination."""
        return not self.terms

    def degrees(self) -> set[int]:
        """Codimensions of the terms."""
        return {t.degree() for t in self.terms}

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready dictionary."""
        return {"g": self.g, "n": self.n, "terms": [t.to_dict() for t in self.terms]}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "TautExpr":
        """Inverse of `to_dict`."""
        return cls.build(
            int(data["g"]),
            int(data["n"]),
            (DecoratedGraphTerm.from_dict(t) for t in data.get("terms", [])),
        )


def taut_expr_to_json(x: TautExpr) -> str:
    """Canonical compact JSON text."""
    return json.dumps(x.to_dict(), separators=(",", ":"), sort_keys=True)


def taut_expr_from_json(text: str) -> TautExpr:
    """Parse text produced by `taut_expr_to_json`."""
    return TautExpr.from_dict(json.loads(text))


def lambda_restriction(graph: StableTree, i: int) -> list[tuple[Fraction, Decoration]]:
    """
    Restriction of lambda_i to a stratum of compact type.

    The Hodge bundle splits as the sum of the vertex Hodge bundles, so lambda_i restricts to
    the degree-i part of prod_v c(E_v).
    """
    parts: list[tuple[int, ...]] = [()]
    for v, genus in enumerate(graph.genera):
        parts = [p + (k,) for p in parts for k in range(min(genus, i) + 1)]
    result = []
    for split in parts:
        if sum(split) != i:
            continue
        decoration = normalize_decoration(
            (f"lam{k}v{v}", 1) for v, k in enumerate(split) if k
        )
        result.append((Fraction(1), decoration))
    return result


def lambda_product(x: TautExpr, i: int) -> TautExpr:
    """Product of an expression with the Hodge class lambda_i of the ambient space."""
    terms = []
    for term in x.terms:
        for coeff, extra in lambda_restriction(term.graph, i):
            terms.append(
                DecoratedGraphTerm(
                    coeff * term.coefficient,
                    term.graph,
                    normalize_decoration(term.decoration + extra),
                )
            )
    return TautExpr.build(x.g, x.n, terms)


def decoration_text(decoration: Sequence[tuple[str, int]]) -> str:
    """Human-readable decoration such as "psi3^2*lam1v0", "1" when empty."""
    if not decoration:
        return "1"
    return "*".join(s if e == 1 else f"{s}^{e}" for s, e in decoration)
