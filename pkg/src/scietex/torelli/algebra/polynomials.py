"""
Exact multivariate polynomials over the rationals.

Polynomials are sympy sparse `PolyElement` objects over `QQ` in graded-lex order. A ring is
identified by the ordered tuple of its variable names; `poly_ring` caches rings per tuple.
Public rational values are `fractions.Fraction`, conversion helpers translate between
`Fraction` and ground-domain elements.

Grading is total degree by default. Functions taking `weights` use the weighted degree
sum(e_i * w_i) instead, which serves lambda-classes (deg lambda_i = i) and Chern symbols.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, Mapping, Sequence

from sympy import QQ, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from .exceptions import NonUnit, PolynomialSyntaxError

Rational = Fraction
MPoly = PolyElement

_PARSE_TRANSFORMATIONS = standard_transformations + (convert_xor,)


@lru_cache(maxsize=None)
def poly_ring(names: tuple[str, ...]) -> PolyRing:
    """
    Polynomial ring over QQ in graded-lex order.

    Args:
        names (tuple[str, ...]): Ordered variable names.

    Returns:
        PolyRing: The (cached) ring.
    """
    if not names:
        names = ("_",)
    return ring(list(names), QQ, grlex)[0]


def ring_names(r: PolyRing) -> tuple[str, ...]:
    """Variable names of a ring in order."""
    return tuple(str(s) for s in r.symbols)


def gen(r: PolyRing, name: str) -> PolyElement:
    """Generator of `r` with the given name."""
    return r.gens[ring_names(r).index(name)]


def to_fraction(value: Any) -> Fraction:
    """
    Convert an exact rational value to `Fraction`.

    Accepts ints, Fractions, ground-domain elements of QQ and sympy Rationals.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    return Fraction(int(value.numerator), int(value.denominator))


def to_qq(value: Any) -> Any:
    """Convert an exact rational value to an element of the QQ domain."""
    frac = to_fraction(value)
    return QQ(frac.numerator, frac.denominator)


def constant(r: PolyRing, value: Any) -> PolyElement:
    """Constant polynomial of `r`."""
    return r.ground_new(to_qq(value))


def constant_term(p: PolyElement) -> Fraction:
    """Coefficient of the zero monomial."""
    return to_fraction(p.get(p.ring.zero_monom, QQ.zero))


def coefficient(p: PolyElement, monom: Sequence[int]) -> Fraction:
    """Coefficient of the given exponent vector."""
    return to_fraction(p.get(tuple(monom), QQ.zero))


def weighted_degree(monom: Sequence[int], weights: Sequence[int] | None = None) -> int:
    """
    Degree of an exponent vector.

    Args:
        monom (Sequence[int]): Exponent vector.
        weights (Sequence[int] | None): Per-variable weights, all 1 when None.

    Returns:
        int: Weighted total degree.
    """
    if weights is None:
        return sum(monom)
    return sum(e * w for e, w in zip(monom, weights))


def degrees(p: PolyElement, weights: Sequence[int] | None = None) -> set[int]:
    """Set of weighted degrees of the terms of `p`."""
    return {weighted_degree(m, weights) for m in p.keys()}


def is_homogeneous(p: PolyElement, weights: Sequence[int] | None = None) -> bool:
    """True when all terms of `p` share one weighted degree (zero counts as homogeneous)."""
    return len(degrees(p, weights)) <= 1


def graded_piece(p: PolyElement, d: int, weights: Sequence[int] | None = None) -> PolyElement:
    """
    Homogeneous component of weighted degree exactly `d`.

    Args:
        p (PolyElement): Polynomial.
        d (int): Degree.
        weights (Sequence[int] | None): Variable weights.

    Returns:
        PolyElement: The degree-d part.
    """
    return p.ring.from_dict(
        {m: c for m, c in p.items() if weighted_degree(m, weights) == d}
    )


def truncate(
    p: PolyElement,
    d: int,
    mode: str = "upto",
    weights: Sequence[int] | None = None,
) -> PolyElement:
    """
    Drop terms by degree.

    Args:
        p (PolyElement): Polynomial.
        d (int): Degree bound, d >= 0.
        mode (str): "upto" keeps terms of degree <= d, "exact" keeps degree == d.
        weights (Sequence[int] | None): Variable weights.

    Returns:
        PolyElement: Truncated polynomial.
    """
    if d < 0:
        raise ValueError(f"Truncation degree must be non-negative, got {d}")
    if mode == "exact":
        return graded_piece(p, d, weights)
    if mode != "upto":
        raise ValueError(f"Unknown truncation mode: {mode}")
    return p.ring.from_dict(
        {m: c for m, c in p.items() if weighted_degree(m, weights) <= d}
    )


def series_inverse(
    p: PolyElement, d: int, weights: Sequence[int] | None = None
) -> PolyElement:
    """
    Inverse of a polynomial with constant term 1 modulo terms of degree > d.

    Args:
        p (PolyElement): Polynomial with constant term 1.
        d (int): Degree cap.
        weights (Sequence[int] | None): Positive variable weights.

    Raises:
        NonUnit: If the constant term of `p` is not 1.

    Returns:
        PolyElement: q with p * q = 1 up to degree d.
    """
    if constant_term(p) != 1:
        raise NonUnit(f"Constant term must be 1, got {constant_term(p)}")
    r = p.ring
    u = r.one - p
    result = r.one
    power = r.one
    for _ in range(d):
        power = truncate(power * u, d, weights=weights)
        if not power:
            break
        result += power
    return result


def substitute(
    p: PolyElement, images: Mapping[str, PolyElement], target: PolyRing
) -> PolyElement:
    """
    Simultaneous substitution of variables followed by a move to another ring.

    Variables of `p` without an image must also be variables of `target`.

    Args:
        p (PolyElement): Source polynomial.
        images (Mapping[str, PolyElement]): Variable name to image polynomial.
        target (PolyRing): Ring of the result.

    Returns:
        PolyElement: The substituted polynomial in `target`.
    """
    source_names = ring_names(p.ring)
    names = list(source_names)
    for image in images.values():
        for name in ring_names(image.ring):
            if name not in names:
                names.append(name)
    for name in ring_names(target):
        if name not in names:
            names.append(name)
    union = poly_ring(tuple(names))
    q = p.set_ring(union)
    replacements = [
        (gen(union, name), image.set_ring(union))
        for name, image in images.items()
        if name in source_names
    ]
    if replacements:
        q = q.compose(replacements)
    return q.set_ring(target)


def parse_poly(text: str, r: PolyRing) -> PolyElement:
    """
    Parse text such as "3/2*l1^2*l2 - l3" into a polynomial of `r`.

    Args:
        text (str): Polynomial text; `^` and `**` both denote powers.
        r (PolyRing): Target ring; every variable used must belong to it.

    Raises:
        PolynomialSyntaxError: On malformed text or unknown variables.

    Returns:
        PolyElement: Parsed polynomial.
    """
    local = {name: Symbol(name) for name in ring_names(r)}
    try:
        expr = parse_expr(text, local_dict=local, transformations=_PARSE_TRANSFORMATIONS)
    except (SyntaxError, TypeError, ValueError) as exc:
        raise PolynomialSyntaxError(f"Cannot parse polynomial {text!r}: {exc}") from exc
    unknown = {str(s) for s in expr.free_symbols} - set(local)
    if unknown:
        raise PolynomialSyntaxError(
            f"Unknown variables {sorted(unknown)} in {text!r}, allowed: {sorted(local)}"
        )
    return r.from_expr(expr)


def format_rational(value: Any) -> str:
    """Render a rational as "p/q", or "p" for integers."""
    frac = to_fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def render(p: PolyElement, names: Sequence[str] | None = None) -> str:
    """
    Canonical text of a polynomial.

    Terms follow the ring's graded-lex order, highest first; coefficients are "p/q".

    Args:
        p (PolyElement): Polynomial.
        names (Sequence[str] | None): Display names overriding the ring's variable names.

    Returns:
        str: Text such as "-3*c5 + 4*z1*c4 + 1/2".
    """
    if not p:
        return "0"
    labels = list(names) if names is not None else list(ring_names(p.ring))
    text = ""
    for index, (monom, coeff) in enumerate(p.terms()):
        value = to_fraction(coeff)
        factors = [
            label if e == 1 else f"{label}^{e}"
            for label, e in zip(labels, monom)
            if e
        ]
        magnitude = abs(value)
        if not factors:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = f"{format_rational(magnitude)}*" + "*".join(factors)
        if index == 0:
            text = f"-{body}" if value < 0 else body
        else:
            text += f" - {body}" if value < 0 else f" + {body}"
    return text
