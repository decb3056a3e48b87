"""
The invariant ring I_{g,s}.

I_{g,s} is generated by theta_i (1 <= i <= s) and eta_{ij} (i < j), all in degree 1, with the
convention eta_{ii} = theta_i. The relations are the coefficients in a_1, ..., a_s of

    (sum_i a_i^2 theta_i + sum_{i<j} a_i a_j eta_{ij})^(g+1).

Integration against the socle (degree gs) extracts determinant coefficients: for an exponent
map a, the integral of eta^a / a! is the coefficient of m^a in det(M)^g, M the symmetric s x s
matrix of formal variables m_ij. Bases are the standard monomials modulo the relations. The ring
is Gorenstein, so the relation ideal is also the kernel of the pairing, and normal forms are
solved from pairing matrices.

Variable names are t1..ts followed by e12, e13, ..., e(s-1)s; the formal matrix entries use
the names m11..mss, m12, ... in the same order, so exponent vectors transfer unchanged.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from logging import Logger, getLogger
from math import factorial, prod
from typing import Any

from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement, PolyRing

from ..algebra import (
    QMatrix,
    constant,
    poly_ring,
    qmatrix,
    rank,
    render,
    solve_linear,
    to_fraction,
    to_qq,
    to_rows,
)
from ..config import ComputeConfigModel, resolve_config
from ..lambda_ring import WrongDegree
from .exceptions import InvariantCapExceeded, MonomialSyntaxError

Monomial = tuple[int, ...]

_FACTOR = re.compile(r"^(?:t(?P<t>\d)|e(?P<i>\d)(?P<j>\d))(?:\^(?P<exp>\d+))?$")


@dataclass(frozen=True, order=True)
class Sym2Index:
    """
    Unordered pair {i, j}, 1 <= i <= j <= s; {i, i} stands for theta_i.

    Attributes:
        i (int): Smaller index.
        j (int): Larger index.
    """

    i: int
    j: int

    @classmethod
    def of(cls, i: int, j: int) -> "Sym2Index":
        """Normalized pair."""
        return cls(min(i, j), max(i, j))

    @property
    def is_diagonal(self) -> bool:
        """True for theta_i."""
        return self.i == self.j

    @property
    def name(self) -> str:
        """Variable name, t<i> or e<i><j>."""
        return f"t{self.i}" if self.is_diagonal else f"e{self.i}{self.j}"


def sym2_indices(s: int) -> tuple[Sym2Index, ...]:
    """Generators in variable order: diagonal pairs, then off-diagonal pairs."""
    diagonal = tuple(Sym2Index(i, i) for i in range(1, s + 1))
    off = tuple(Sym2Index(i, j) for i, j in combinations(range(1, s + 1), 2))
    return diagonal + off


def inv_names(s: int) -> tuple[str, ...]:
    """Variable names t1..ts, e12, ..."""
    return tuple(index.name for index in sym2_indices(s))


def inv_ring(s: int) -> PolyRing:
    """Polynomial ring of the generators of I_{g,s}."""
    return poly_ring(inv_names(s))


def matrix_names(s: int) -> tuple[str, ...]:
    """Names of the formal matrix entries in generator order."""
    return tuple(f"m{index.i}{index.j}" for index in sym2_indices(s))


def matrix_ring(s: int) -> PolyRing:
    """Polynomial ring of the formal symmetric matrix."""
    return poly_ring(matrix_names(s))


def fold_dimension(g: int, s: int) -> int:
    """dim X_g^s = g(g+1)/2 + gs."""
    return g * (g + 1) // 2 + g * s


def check_caps(g: int, s: int, config: ComputeConfigModel | None = None,
               logger: Logger | None = None) -> None:
    """
    Enforce the configured caps of the invariant ring.

    Raises:
        InvariantCapExceeded: If g or s exceeds its cap.
        ValueError: If g < 1 or s < 1.
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    cfg = resolve_config(config)
    if g < 1 or s < 1:
        raise ValueError(f"Need g >= 1 and s >= 1, got g={g}, s={s}")
    if g > cfg.inv_max_genus or s > cfg.inv_max_folds:
        logger.warning(
            "I_{%d,%d} exceeds the caps g <= %d, s <= %d",
            g, s, cfg.inv_max_genus, cfg.inv_max_folds,
        )
        raise InvariantCapExceeded(
            f"I_{{{g},{s}}} exceeds the caps g <= {cfg.inv_max_genus}, s <= {cfg.inv_max_folds}"
        )


@dataclass(frozen=True)
class InvClass:
    """
    Element of Sym(Sym^2 Q^s), read in I_{g,s}.

    Attributes:
        g (int): Genus.
        s (int): Fold count.
        expression (PolyElement): Polynomial in t1..ts, e12, ...
    """

    g: int
    s: int
    expression: PolyElement

    @classmethod
    def from_monomial(cls, g: int, s: int, monom: Monomial, coeff: Any = 1) -> "InvClass":
        """Single term."""
        r = inv_ring(s)
        if not coeff:
            return cls(g, s, r.zero)
        return cls(g, s, r.from_dict({tuple(monom): to_qq(coeff)}))

    @classmethod
    def generator(cls, g: int, s: int, i: int, j: int) -> "InvClass":
        """theta_i for i == j, eta_{ij} otherwise."""
        name = Sym2Index.of(i, j).name
        r = inv_ring(s)
        return cls(g, s, r.gens[inv_names(s).index(name)])

    def degrees(self) -> set[int]:
        """Degrees of the nonzero homogeneous parts."""
        return {sum(m) for m in self.expression.keys()}

    def homogeneous_part(self, k: int) -> "InvClass":
        """Degree-k part."""
        return InvClass(
            self.g,
            self.s,
            self.expression.ring.from_dict(
                {m: c for m, c in self.expression.items() if sum(m) == k}
            ),
        )

    def linear_coefficients(self) -> dict[tuple[int, int], Fraction]:
        """
        Coefficients of theta_i (key (i, i)) and eta_{ij} (key (i, j)).

        Raises:
            WrongDegree: If the class has a part outside degree 1.
        """
        if self.degrees() - {1}:
            raise WrongDegree(f"Expected a degree-1 class, got degrees {sorted(self.degrees())}")
        result = {}
        count = len(inv_names(self.s))
        for position, index in enumerate(sym2_indices(self.s)):
            monom = tuple(int(k == position) for k in range(count))
            value = to_fraction(self.expression.get(monom, 0))
            if value:
                result[(index.i, index.j)] = value
        return result

    def __add__(self, other: "InvClass") -> "InvClass":
        return InvClass(self.g, self.s, self.expression + other.expression)

    def __sub__(self, other: "InvClass") -> "InvClass":
        return InvClass(self.g, self.s, self.expression - other.expression)

    def __mul__(self, other: Any) -> "InvClass":
        if isinstance(other, InvClass):
            return InvClass(self.g, self.s, self.expression * other.expression)
        return InvClass(self.g, self.s, self.expression * constant(self.expression.ring, other))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.expression)

    def __str__(self) -> str:
        return render(self.expression)


def parse_monomial(text: str, s: int, g: int = 1) -> InvClass:
    """
    Parse a product of generators such as "t1^2*e12".

    `e<i><i>` is read as `t<i>` and `e<j><i>` as `e<i><j>`.

    Raises:
        MonomialSyntaxError: On tokens outside the grammar or indices above s.
    """
    names = inv_names(s)
    exponents = [0] * len(names)
    cleaned = text.replace(" ", "").replace("**", "^")
    if cleaned in ("", "1"):
        return InvClass.from_monomial(g, s, tuple(exponents))
    for factor in cleaned.split("*"):
        match = _FACTOR.match(factor)
        if match is None:
            raise MonomialSyntaxError(f"Cannot parse factor {factor!r} of {text!r}")
        if match.group("t") is not None:
            i = j = int(match.group("t"))
        else:
            i, j = int(match.group("i")), int(match.group("j"))
        if not (1 <= i <= s and 1 <= j <= s):
            raise MonomialSyntaxError(f"Index out of range 1..{s} in {factor!r}")
        exponent = int(match.group("exp") or 1)
        exponents[names.index(Sym2Index.of(i, j).name)] += exponent
    return InvClass.from_monomial(g, s, tuple(exponents))


def monomials(s: int, k: int) -> list[Monomial]:
    """Exponent vectors of degree k in the generators, in a fixed order."""
    n = len(inv_names(s))
    result = []
    for combo in combinations_with_replacement(range(n), k):
        exps = [0] * n
        for index in combo:
            exps[index] += 1
        result.append(tuple(exps))
    return result


def _symmetric_det(r: PolyRing, s: int, off_diagonal_scale: Any = 1) -> PolyElement:
    if s == 0:
        return r.one
    names = list(sym2_indices(s))
    scale = constant(r, off_diagonal_scale)
    rows = []
    for i in range(1, s + 1):
        row = []
        for j in range(1, s + 1):
            x = r.gens[names.index(Sym2Index.of(i, j))]
            row.append(x if i == j else x * scale)
        rows.append(row)
    return DomainMatrix(rows, (s, s), r.to_domain()).det()


@lru_cache(maxsize=None)
def det_matrix(s: int) -> PolyElement:
    """det(M) of the formal symmetric matrix."""
    return _symmetric_det(matrix_ring(s), s)


@lru_cache(maxsize=None)
def det_power(g: int, s: int) -> dict[Monomial, Fraction]:
    """Coefficients of det(M)^g by exponent vector."""
    power = det_matrix(s) ** g if g > 0 else matrix_ring(s).one
    return {m: to_fraction(c) for m, c in power.items()}


def _exponent_factorial(monom: Monomial) -> int:
    return prod(factorial(e) for e in monom)


def integrate_monomial(g: int, s: int, monom: Monomial) -> Fraction:
    """Integral of eta^a: a! times the coefficient of m^a in det(M)^g."""
    coeff = det_power(g, s).get(tuple(monom))
    if coeff is None:
        return Fraction(0)
    return coeff * _exponent_factorial(monom)


def integrate(x: InvClass) -> Fraction:
    """
    Integral over X_g^s of a class of degree gs.

    Raises:
        WrongDegree: If x has a part outside degree gs.
    """
    top = x.g * x.s
    if x.degrees() - {top}:
        raise WrongDegree(f"Expected degree {top}, got degrees {sorted(x.degrees())}")
    total = Fraction(0)
    for monom, coeff in x.expression.items():
        total += to_fraction(coeff) * integrate_monomial(x.g, x.s, monom)
    return total


def _product_monomial(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def full_pairing(g: int, s: int, k: int) -> tuple[tuple[Fraction, ...], ...]:
    """Pairing of all degree-k monomials (rows) with all degree-(gs-k) monomials."""
    cols = monomials(s, g * s - k)
    return tuple(
        tuple(integrate_monomial(g, s, _product_monomial(a, b)) for b in cols)
        for a in monomials(s, k)
    )


def monomial_weight(s: int, monom: Monomial) -> tuple[int, ...]:
    """Torus weight in a_1..a_s: theta_i counts twice at i, eta_ij once at i and once at j."""
    weight = [0] * s
    for index, exponent in zip(sym2_indices(s), monom):
        weight[index.i - 1] += exponent
        weight[index.j - 1] += exponent
    return tuple(weight)


@lru_cache(maxsize=None)
def _standard_indices(g: int, s: int, k: int) -> tuple[int, ...]:
    if k < 0 or k > g * s:
        return ()
    all_monomials = monomials(s, k)
    blocks: dict[tuple[int, ...], list[int]] = {}
    for position, monom in enumerate(all_monomials):
        blocks.setdefault(monomial_weight(s, monom), []).append(position)
    relations: dict[tuple[int, ...], list[PolyElement]] = {}
    for p in relation_basis(g, s, k):
        relations.setdefault(monomial_weight(s, next(iter(p))), []).append(p)
    standard: list[int] = []
    for weight, positions in blocks.items():
        polys = relations.get(weight)
        if not polys:
            standard.extend(positions)
            continue
        # latest monomials first: pivots land on them and the earliest ones stay standard
        order = positions[::-1]
        local = {all_monomials[p]: i for i, p in enumerate(order)}
        rows = []
        for p in polys:
            row = [Fraction(0)] * len(order)
            for monom, coeff in p.items():
                row[local[monom]] = to_fraction(coeff)
            rows.append(row)
        _, pivots = qmatrix(rows).rref()
        leading = set(pivots)
        standard.extend(p for i, p in enumerate(order) if i not in leading)
    return tuple(sorted(standard))


def quotient_basis(g: int, s: int, k: int) -> list[Monomial]:
    """
    Standard monomials of I_{g,s} in degree k.

    The relations of degree k are row reduced with the monomials taken latest first, so every
    leading monomial is a late one; the monomials that lead no relation form the basis. Both
    relations and monomials split by torus weight, and each weight block is reduced on its own.
    """
    all_monomials = monomials(s, k) if 0 <= k <= g * s else []
    return [all_monomials[i] for i in _standard_indices(g, s, k)]


def dims(g: int, s: int) -> list[int]:
    """Graded dimensions of I_{g,s} in degrees 0..gs."""
    return [len(quotient_basis(g, s, k)) for k in range(g * s + 1)]


def gram_matrix(g: int, s: int, k: int) -> QMatrix:
    """
    Pairing between the degree-k basis and the degree-(gs-k) basis.

    The matrix is square and nonsingular for a Gorenstein ring.
    """
    if k < 0 or k > g * s:
        raise ValueError(f"Degree {k} outside 0..{g * s}")
    rows = quotient_basis(g, s, k)
    cols = quotient_basis(g, s, g * s - k)
    return qmatrix(
        [[integrate_monomial(g, s, _product_monomial(a, b)) for b in cols] for a in rows],
        cols=len(cols),
    )


def pairing_vector(x: InvClass, k: int) -> list[Fraction]:
    """Integrals of the degree-k part of x against every degree-(gs-k) monomial."""
    cols = monomials(x.s, x.g * x.s - k)
    vector = [Fraction(0)] * len(cols)
    for monom, coeff in x.expression.items():
        if sum(monom) != k:
            continue
        c = to_fraction(coeff)
        for index, b in enumerate(cols):
            vector[index] += c * integrate_monomial(x.g, x.s, _product_monomial(monom, b))
    return vector


def coordinates(x: InvClass, k: int) -> list[Fraction]:
    """Coordinates of the degree-k part of x in `quotient_basis(g, s, k)`."""
    basis = quotient_basis(x.g, x.s, k)
    if not basis:
        return []
    cols = monomials(x.s, x.g * x.s - k)
    a = qmatrix(
        [
            [integrate_monomial(x.g, x.s, _product_monomial(m, b)) for m in basis]
            for b in cols
        ],
        cols=len(basis),
    )
    return list(solve_linear(a, pairing_vector(x, k)).particular)


def normal_form(x: InvClass) -> InvClass:
    """Representative in the quotient basis; parts above degree gs vanish."""
    r = inv_ring(x.s)
    result = r.zero
    for k in sorted(x.degrees()):
        if k > x.g * x.s:
            continue
        for monom, c in zip(quotient_basis(x.g, x.s, k), coordinates(x, k)):
            if c:
                result += r.from_dict({monom: to_qq(c)})
    return InvClass(x.g, x.s, result)


def is_zero_class(x: InvClass) -> bool:
    """True if x vanishes in I_{g,s}."""
    return not normal_form(x)


def relation_generators(g: int, s: int) -> list[PolyElement]:
    """
    Degree-(g+1) relations: coefficients in a of
    (sum a_i^2 theta_i + sum_{i<j} a_i a_j eta_{ij})^(g+1).
    """
    names = inv_names(s)
    a_names = tuple(f"a{i}" for i in range(1, s + 1))
    big = poly_ring(a_names + names)
    a = big.gens[:s]
    x = big.gens[s:]
    form = big.zero
    for index, var in zip(sym2_indices(s), x):
        form += a[index.i - 1] * a[index.j - 1] * var
    expanded = form ** (g + 1)
    target = inv_ring(s)
    grouped: dict[Monomial, dict[Monomial, Any]] = {}
    for monom, coeff in expanded.items():
        grouped.setdefault(monom[:s], {})[monom[s:]] = coeff
    return [target.from_dict(grouped[key]) for key in sorted(grouped)]


def relation_basis(g: int, s: int, degree: int) -> list[PolyElement]:
    """Spanning set of the relation ideal in the given degree: generators times monomials."""
    if degree < g + 1:
        return []
    r = inv_ring(s)
    result = []
    for generator in relation_generators(g, s):
        for monom in monomials(s, degree - g - 1):
            result.append(generator * r.from_dict({monom: r.domain.one}))
    return result


def _block_rank(polys: list[PolyElement]) -> int:
    columns = sorted({monom for p in polys for monom in p})
    index = {m: i for i, m in enumerate(columns)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(columns)
        for monom, coeff in p.items():
            row[index[monom]] = to_fraction(coeff)
        rows.append(row)
    return rank(qmatrix(rows))


def span_rank(polys: list[PolyElement], k: int, s: int) -> int:
    """
    Rank of the span of homogeneous degree-k polynomials in the generators.

    Polynomials of a single torus weight are ranked block by block; if any of them mixes
    weights, all are ranked together.
    """
    blocks: dict[Any, list[PolyElement]] = {}
    for p in polys:
        if not p:
            continue
        if any(sum(monom) != k for monom in p):
            raise WrongDegree(f"Expected polynomials of degree {k}")
        weights = {monomial_weight(s, monom) for monom in p}
        key = weights.pop() if len(weights) == 1 else None
        blocks.setdefault(key, []).append(p)
    if None in blocks:
        return _block_rank([p for block in blocks.values() for p in block])
    return sum(_block_rank(block) for block in blocks.values())


def _pair_matchings(items: tuple[int, ...]) -> list[list[tuple[int, int]]]:
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    result = []
    for position, other in enumerate(rest):
        remaining = rest[:position] + rest[position + 1:]
        for tail in _pair_matchings(remaining):
            result.append([(first, other)] + tail)
    return result


def iota(s: int, k: int) -> list[PolyElement]:
    """
    Images of Sym^(2k)(Q^s) -> Sym^k(Sym^2 Q^s), one per nondecreasing index string, each a
    sum over all partitions of the string into pairs. Written in theta/eta through the
    generator dictionary theta_i = e_ii, eta_{ij} = 2 e_ij.
    """
    r = inv_ring(s)
    names = inv_names(s)
    half = constant(r, Fraction(1, 2))
    result = []
    for string in combinations_with_replacement(range(1, s + 1), 2 * k):
        image = r.zero
        for matching in _pair_matchings(tuple(string)):
            term = r.one
            for i, j in matching:
                var = r.gens[names.index(Sym2Index.of(i, j).name)]
                term *= var if i == j else var * half
            image += term
        result.append(image)
    return result


def socle_class(g: int, s: int) -> InvClass:
    """prod_i theta_i^g / g!."""
    monom = tuple([g] * s + [0] * (len(inv_names(s)) - s))
    return InvClass.from_monomial(g, s, monom, Fraction(1, factorial(g) ** s))


def pairing_kernel_dimension(g: int, s: int, k: int) -> int:
    """Dimension of the kernel of the full pairing in degree k (relations in degree k)."""
    rows = full_pairing(g, s, k)
    if not rows:
        return 0
    return len(rows) - rank(qmatrix(rows))


def gram_rows(g: int, s: int, k: int) -> list[list[Fraction]]:
    """`gram_matrix` entries as Fractions."""
    return to_rows(gram_matrix(g, s, k))
