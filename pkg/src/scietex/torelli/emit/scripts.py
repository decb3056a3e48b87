"""
Scripts for an external tautological-ring calculator.

Dialect ``v1`` writes admcycles code: each decorated graph term becomes a `StableGraph` whose
vertex classes (products of psi, lambda and kappa classes on the vertex moduli spaces) are
pushed forward with `boundary_pushforward`, scaled and summed. Output is deterministic: the
same input always produces the same bytes, with LF line endings and a provenance header

    # generated-by: scietex-torelli <version> input-sha256:<hex>

where the hash is taken over the canonical JSON of the input expression (and of the
comparison target, when there is one).
"""

import hashlib
from abc import ABC, abstractmethod
from fractions import Fraction
from logging import Logger
from typing import Optional

from ..config import ComputeConfigModel
from ..config.defaults import DEFAULT_DIALECT
from ..version import __version__
from .abel_jacobi import delta_class
from .exceptions import OutOfRange, UnsupportedDialect
from .taut_expr import (
    DecoratedGraphTerm,
    StableTree,
    TautExpr,
    parse_symbol,
    taut_expr_to_json,
)

TOOL_NAME = "scietex-torelli"


def input_digest(x: TautExpr, compare_to: Optional[TautExpr] = None) -> str:
    """SHA-256 hex digest of the canonical JSON of the input (and target)."""
    text = taut_expr_to_json(x)
    if compare_to is not None:
        text += "\n" + taut_expr_to_json(compare_to)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def header_line(x: TautExpr, compare_to: Optional[TautExpr] = None) -> str:
    """Provenance comment placed on the first line of every script."""
    return f"# generated-by: {TOOL_NAME} {__version__} input-sha256:{input_digest(x, compare_to)}"


class ScriptDialect(ABC):
    """
    Code generator for one calculator dialect.

    Subclasses render a single decorated term and the surrounding program; `render` assembles
    the script from these pieces.
    """

    name: str = ""

    @abstractmethod
    def preamble(self, g: int, n: int) -> list[str]:
        """Import and ambient lines."""

    @abstractmethod
    def accumulate(
        self, variable: str, g: int, n: int, terms: list[DecoratedGraphTerm]
    ) -> list[str]:
        """Lines building `variable` as the sum of `terms`."""

    @abstractmethod
    def comparison(self, left: str, right: str) -> list[str]:
        """Lines printing whether two classes agree."""

    def render(self, x: TautExpr, compare_to: Optional[TautExpr] = None) -> str:
        """Complete script text."""
        lines = [header_line(x, compare_to)]
        lines.append(f"# ambient: g={x.g} n={x.n} terms={len(x)}")
        lines.extend(self.preamble(x.g, x.n))
        lines.append("")
        lines.extend(self.accumulate("result", x.g, x.n, list(x.terms)))
        if compare_to is not None:
            if (compare_to.g, compare_to.n) != (x.g, x.n):
                raise UnsupportedDialect(
                    f"Comparison target lives on ({compare_to.g}, {compare_to.n}),"
                    f" the expression on ({x.g}, {x.n})"
                )
            lines.append("")
            lines.extend(self.accumulate("target", x.g, x.n, list(compare_to.terms)))
            lines.append("")
            lines.extend(self.comparison("result", "target"))
        return "\n".join(lines) + "\n"


def _rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f'QQ("{value.numerator}/{value.denominator}")'


class AdmcyclesDialect(ScriptDialect):
    """The ``v1`` dialect: admcycles running inside Sage."""

    name = "v1"

    def preamble(self, g: int, n: int) -> list[str]:
        return ["from admcycles import *", "", f"g, n = {g}, {n}"]

    @staticmethod
    def vertex_class(graph: StableTree, v: int, decoration: list[tuple[str, int]]) -> str:
        """Class on M_{g(v), n(v)}; psi indices follow the leg order of the vertex."""
        genus, valence = graph.genera[v], graph.valence(v)
        factors = []
        for symbol, exponent in decoration:
            kind, where, index = parse_symbol(symbol)
            if kind == "psi":
                text = f"psiclass({graph.legs[v].index(where) + 1}, {genus}, {valence})"
            elif kind == "lam":
                text = f"lambdaclass({index}, {genus}, {valence})"
            else:
                text = f"kappaclass({index}, {genus}, {valence})"
            factors.append(text if exponent == 1 else f"{text}**{exponent}")
        if not factors:
            return f"fundclass({genus}, {valence})"
        return " * ".join(factors)

    def term_line(self, variable: str, term: DecoratedGraphTerm) -> list[str]:
        """Two lines: the stable graph and the accumulated pushforward."""
        graph = term.graph
        per_vertex: list[list[tuple[str, int]]] = [[] for _ in graph.genera]
        for symbol, exponent in term.decoration:
            kind, where, _ = parse_symbol(symbol)
            v = graph.vertex_of(where) if kind == "psi" else where
            per_vertex[v].append((symbol, exponent))
        genera = ", ".join(str(x) for x in graph.genera)
        legs = ", ".join("[" + ", ".join(str(h) for h in legs) + "]" for legs in graph.legs)
        edges = ", ".join(f"({a}, {b})" for a, b in graph.edges)
        classes = ", ".join(
            self.vertex_class(graph, v, per_vertex[v]) for v in range(len(graph.genera))
        )
        return [
            f"G = StableGraph([{genera}], [{legs}], [{edges}])",
            f"{variable} += {_rational(term.coefficient)} * G.boundary_pushforward([{classes}])",
        ]

    def accumulate(
        self, variable: str, g: int, n: int, terms: list[DecoratedGraphTerm]
    ) -> list[str]:
        lines = [f"{variable} = 0 * fundclass(g, n)"]
        for term in terms:
            lines.extend(self.term_line(variable, term))
        return lines

    def comparison(self, left: str, right: str) -> list[str]:
        return [
            f'equal = ({left} - {right}).is_zero(moduli="ct")',
            'print("equal" if equal else "different")',
        ]


_DIALECTS: dict[str, type[ScriptDialect]] = {"v1": AdmcyclesDialect}


def get_dialect(name: str) -> ScriptDialect:
    """Generator for a dialect name."""
    try:
        return _DIALECTS[name]()
    except KeyError as exc:
        known = ", ".join(sorted(_DIALECTS))
        raise UnsupportedDialect(f"Unknown script dialect {name!r}; known: {known}") from exc


def emit_script(
    x: TautExpr, dialect: str = DEFAULT_DIALECT, compare_to: Optional[TautExpr] = None
) -> str:
    """
    Script that rebuilds `x` in the external calculator.

    Args:
        x (TautExpr): Expression to emit. The empty expression gives the zero class.
        dialect (str): Script dialect, currently only ``"v1"``.
        compare_to (TautExpr | None): Optional target; the script then prints whether the two
            classes agree on the compact-type locus.

    Raises:
        UnsupportedDialect: For an unknown dialect or a target on another moduli space.

    Returns:
        str: Script text ending with a newline.
    """
    return get_dialect(dialect).render(x, compare_to)


def delta_emit(
    g: int,
    s: int = 1,
    dialect: str = DEFAULT_DIALECT,
    config: Optional[ComputeConfigModel] = None,
    logger: Optional[Logger] = None,
) -> str:
    """
    Script for Delta_{g,1} on M_{g,2}^ct together with its lambda_g-pairing check.

    The script builds Delta, then pairs Delta * lambda_g with every tautological generator of
    the complementary degree dim M_{g,n} - 2g = g - 3 + n and prints whether all pairings
    vanish, that is whether Delta lies in the Gorenstein kernel.

    Raises:
        OutOfRange: If g < 2 or s != 1.
    """
    if g < 2:
        raise OutOfRange(f"Delta_(g,s) needs g >= 2, got {g}")
    if s != 1:
        raise OutOfRange(f"Dialect {dialect} emits Delta_(g,s) only for s = 1, got s = {s}")
    x = delta_class(g, config, logger)
    script = emit_script(x, dialect)
    degree = g - 3 + x.n
    lines = [
        "",
        f"degree = {degree}",
        "pairings = [",
        "    (result * lambdaclass(g, g, n) * b).evaluate() for b in tautgens(g, n, degree)",
        "]",
        'print("kernel" if all(value == 0 for value in pairings) else "not in kernel")',
    ]
    return script + "\n".join(lines) + "\n"
