"""
The tautological ring R*(A_g).

R*(A_g) is the quotient of Q[lambda_1, ..., lambda_g] (deg lambda_i = i) by lambda_g and the
homogeneous components of c(E) c(E^vee) - 1. It is Gorenstein with socle spanned by
lambda_1 ... lambda_{g-1} in degree g(g-1)/2, where integration against lambda_g is
gamma_g = prod_{i=1..g} |B_{2i}| / (4i).

The quotient is computed degree by degree: relation vectors are generators times monomials,
row reduced over QQ. Monomials that are not squarefree in lambda_1, ..., lambda_{g-1} are
placed first so that elimination keeps the squarefree monomials as basis representatives.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from logging import Logger, getLogger
from operator import mul
from typing import Any

from sympy import bernoulli
from sympy.polys.rings import PolyElement, PolyRing
from sympy.utilities.iterables import partitions

from ..algebra import (
    QMatrix,
    coefficient,
    constant,
    parse_poly,
    poly_ring,
    qmatrix,
    render,
    to_fraction,
    to_qq,
    to_rows,
    weighted_degree,
)
from ..config import ComputeConfigModel, resolve_config
from .exceptions import DegreeOutOfRange, GenusCapExceeded, WrongDegree

Monomial = tuple[int, ...]


def lambda_names(g: int) -> tuple[str, ...]:
    """Variable names l1, ..., lg."""
    return tuple(f"l{i}" for i in range(1, g + 1))


def lambda_ring(g: int) -> PolyRing:
    """Polynomial ring Q[lambda_1, ..., lambda_g]."""
    return poly_ring(lambda_names(g))


def lambda_weights(g: int) -> tuple[int, ...]:
    """Degrees of lambda_1, ..., lambda_g."""
    return tuple(range(1, g + 1))


def socle_degree(g: int) -> int:
    """Top degree g(g-1)/2 of R*(A_g)."""
    return g * (g - 1) // 2


def gamma(g: int) -> Fraction:
    """
    Socle constant gamma_g = prod_{i=1..g} |B_{2i}| / (4i).

    Examples:
        gamma(1) = 1/24, gamma(2) = 1/5760.
    """
    return reduce(
        mul,
        (abs(to_fraction(bernoulli(2 * i))) / (4 * i) for i in range(1, g + 1)),
        Fraction(1),
    )


@dataclass(frozen=True)
class LambdaPoly:
    """
    Element of Q[lambda_1, ..., lambda_g], graded by deg lambda_i = i.

    Attributes:
        g (int): Genus.
        expression (PolyElement): Polynomial in l1, ..., lg.
    """

    g: int
    expression: PolyElement

    @classmethod
    def from_monomial(cls, g: int, monom: Monomial, coeff: Any = 1) -> "LambdaPoly":
        """Single term coeff * lambda^monom."""
        r = lambda_ring(g)
        if not coeff:
            return cls(g, r.zero)
        return cls(g, r.from_dict({tuple(monom): to_qq(coeff)}))

    @classmethod
    def lam(cls, g: int, i: int) -> "LambdaPoly":
        """The class lambda_i; lambda_0 = 1 and lambda_i = 0 for i > g."""
        r = lambda_ring(g)
        if i == 0:
            return cls(g, r.one)
        if i > g or i < 0:
            return cls(g, r.zero)
        return cls(g, r.gens[i - 1])

    def degrees(self) -> set[int]:
        """Degrees of the nonzero homogeneous parts."""
        return {weighted_degree(m, lambda_weights(self.g)) for m in self.expression.keys()}

    def __add__(self, other: "LambdaPoly") -> "LambdaPoly":
        return LambdaPoly(self.g, self.expression + other.expression)

    def __sub__(self, other: "LambdaPoly") -> "LambdaPoly":
        return LambdaPoly(self.g, self.expression - other.expression)

    def __mul__(self, other: Any) -> "LambdaPoly":
        if isinstance(other, LambdaPoly):
            return LambdaPoly(self.g, self.expression * other.expression)
        return LambdaPoly(self.g, self.expression * constant(self.expression.ring, other))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.expression)

    def __str__(self) -> str:
        return render(self.expression)


def _monomials(g: int, k: int) -> list[Monomial]:
    """Exponent vectors of weighted degree k in lambda_1..lambda_g."""
    if k < 0:
        return []
    if k == 0:
        return [tuple([0] * g)]
    result = []
    for part in partitions(k, k=g):
        result.append(tuple(part.get(i, 0) for i in range(1, g + 1)))
    return result


def _is_basis_candidate(monom: Monomial) -> bool:
    return monom[-1] == 0 and all(e <= 1 for e in monom)


class LambdaBasis:
    """
    Graded monomial basis of R*(A_g) with normal-form reduction.

    Attributes:
        g (int): Genus.
        socle_degree (int): g(g-1)/2.
        basis (dict[int, list[Monomial]]): Basis monomials per degree.
    """

    def __init__(self, g: int) -> None:
        self.g = g
        self.socle_degree = socle_degree(g)
        self.ring = lambda_ring(g)
        self.weights = lambda_weights(g)
        self.basis: dict[int, list[Monomial]] = {}
        self._columns: dict[int, list[Monomial]] = {}
        self._reducers: dict[int, list[tuple[int, list[Fraction]]]] = {}
        self._relations = self._relation_generators()
        for k in range(self.socle_degree + 1):
            self._build_degree(k)
        top = self.coordinates(self.socle_monomial().expression, self.socle_degree)
        self._socle_scale = next(x for x in top if x != 0)

    def _relation_generators(self) -> list[tuple[int, PolyElement]]:
        r, g = self.ring, self.g

        def lam(i: int) -> PolyElement:
            if i == 0:
                return r.one
            return r.gens[i - 1] if i <= g else r.zero

        generators = [(g, r.gens[g - 1])]
        for j in range(2, 2 * g + 1, 2):
            rel = r.zero
            for a in range(j + 1):
                term = lam(a) * lam(j - a)
                rel += term if (j - a) % 2 == 0 else -term
            if rel:
                generators.append((j, rel))
        return generators

    def _build_degree(self, k: int) -> None:
        monomials = _monomials(self.g, k)
        candidates = sorted(
            (m for m in monomials if _is_basis_candidate(m)), key=self._order_key
        )
        others = sorted(
            (m for m in monomials if not _is_basis_candidate(m)), key=self._order_key
        )
        columns = others + candidates
        index = {m: i for i, m in enumerate(columns)}
        rows: list[list[Fraction]] = []
        for deg, rel in self._relations:
            for multiplier in _monomials(self.g, k - deg):
                product = rel * self.ring.from_dict({multiplier: self.ring.domain.one})
                row = [Fraction(0)] * len(columns)
                for monom, coeff in product.items():
                    row[index[monom]] = to_fraction(coeff)
                rows.append(row)
        reducers: list[tuple[int, list[Fraction]]] = []
        pivots: tuple[int, ...] = ()
        if rows:
            reduced, pivots = qmatrix(rows).rref()
            reduced_rows = to_rows(reduced)
            for row_index, col in enumerate(pivots):
                reducers.append((col, reduced_rows[row_index]))
        self._columns[k] = columns
        self._reducers[k] = reducers
        self.basis[k] = sorted(
            (m for i, m in enumerate(columns) if i not in pivots), key=self._order_key
        )

    def _order_key(self, monom: Monomial) -> tuple:
        return (weighted_degree(monom, self.weights), tuple(reversed(monom)))

    def dims(self) -> list[int]:
        """Dimensions of R^k for k = 0..socle degree."""
        return [len(self.basis[k]) for k in range(self.socle_degree + 1)]

    def total_dimension(self) -> int:
        """Sum of the graded dimensions; equals 2^(g-1)."""
        return sum(self.dims())

    def socle_monomial(self) -> LambdaPoly:
        """The socle generator lambda_1 ... lambda_{g-1}."""
        return LambdaPoly.from_monomial(self.g, tuple([1] * (self.g - 1) + [0]))

    def coordinates(self, p: PolyElement, k: int) -> list[Fraction]:
        """
        Coordinates of the degree-k part of `p` in the degree-k basis.

        Raises:
            DegreeOutOfRange: If k exceeds the socle degree.
        """
        if k > self.socle_degree or k < 0:
            raise DegreeOutOfRange(
                f"Degree {k} is outside 0..{self.socle_degree} for g={self.g}"
            )
        columns = self._columns[k]
        index = {m: i for i, m in enumerate(columns)}
        vector = [Fraction(0)] * len(columns)
        for monom, coeff in p.items():
            if weighted_degree(monom, self.weights) == k:
                vector[index[monom]] += to_fraction(coeff)
        for col, row in self._reducers[k]:
            factor = vector[col]
            if factor:
                vector = [v - factor * r for v, r in zip(vector, row)]
        return [vector[index[m]] for m in self.basis[k]]

    def from_coordinates(self, k: int, coords: list[Fraction]) -> LambdaPoly:
        """Class with the given coordinates in degree k."""
        expression = self.ring.zero
        for monom, c in zip(self.basis[k], coords):
            if c:
                expression += LambdaPoly.from_monomial(self.g, monom, c).expression
        return LambdaPoly(self.g, expression)

    def reduce(self, x: LambdaPoly) -> LambdaPoly:
        """Normal form as a class; parts above the socle degree vanish."""
        result = LambdaPoly(self.g, self.ring.zero)
        for k in sorted(x.degrees()):
            if k <= self.socle_degree:
                result = result + self.from_coordinates(k, self.coordinates(x.expression, k))
        return result

    def socle_eval(self, x: LambdaPoly) -> Fraction:
        """
        Coefficient of x relative to lambda_1 ... lambda_{g-1}.

        Raises:
            WrongDegree: If x has a part outside the socle degree.
        """
        if x.degrees() - {self.socle_degree}:
            raise WrongDegree(
                f"Expected degree {self.socle_degree}, got degrees {sorted(x.degrees())}"
            )
        coords = self.coordinates(x.expression, self.socle_degree)
        return coords[0] / self._socle_scale

    def ab_evaluate(self, x: LambdaPoly) -> Fraction:
        """Integral of x * lambda_g over A_g: socle_eval(x) * gamma_g."""
        return self.socle_eval(x) * gamma(self.g)

    def pairing_matrix(self, k: int) -> QMatrix:
        """
        Matrix of <a, b> = ab_evaluate(a * b) for a in degree k, b in the complementary degree.
        """
        if k < 0 or k > self.socle_degree:
            raise DegreeOutOfRange(f"Degree {k} is outside 0..{self.socle_degree}")
        rows = []
        for a in self.basis[k]:
            row = []
            for b in self.basis[self.socle_degree - k]:
                product = LambdaPoly.from_monomial(self.g, a) * LambdaPoly.from_monomial(
                    self.g, b
                )
                row.append(self.ab_evaluate(product))
            rows.append(row)
        return qmatrix(rows, cols=len(self.basis[self.socle_degree - k]))


@lru_cache(maxsize=None)
def _build_cached(g: int) -> LambdaBasis:
    return LambdaBasis(g)


def build_ring(
    g: int, config: ComputeConfigModel | None = None, logger: Logger | None = None
) -> LambdaBasis:
    """
    Build the graded basis of R*(A_g).

    Args:
        g (int): Genus, g >= 1.
        config (ComputeConfigModel | None): Supplies the genus cap.
        logger (Logger | None): Logger for cap warnings.

    Raises:
        GenusCapExceeded: If g exceeds the configured cap.

    Returns:
        LambdaBasis: Cached basis for this genus.
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    cfg = resolve_config(config)
    if g < 1:
        raise ValueError(f"Genus must be at least 1, got {g}")
    if g > cfg.lambda_max_genus:
        logger.warning("Genus %d exceeds the lambda ring cap %d", g, cfg.lambda_max_genus)
        raise GenusCapExceeded(f"Genus {g} exceeds the cap {cfg.lambda_max_genus}")
    logger.debug("Building R*(A_%d)", g)
    return _build_cached(g)


def normal_form(x: LambdaPoly, basis: LambdaBasis) -> dict[int, list[Fraction]]:
    """
    Coordinates of every homogeneous part of x.

    Parts above the socle degree vanish in the ring but have no coordinates; pass x through
    `LambdaBasis.reduce` first to discard them.

    Raises:
        DegreeOutOfRange: If x has a part above the socle degree.
    """
    above = sorted(k for k in x.degrees() if k > basis.socle_degree)
    if above:
        raise DegreeOutOfRange(
            f"Degrees {above} are above the socle degree {basis.socle_degree} for g={basis.g}"
        )
    return {k: basis.coordinates(x.expression, k) for k in sorted(x.degrees())}


def socle_eval(x: LambdaPoly, basis: LambdaBasis | None = None) -> Fraction:
    """Socle coefficient of x; see `LambdaBasis.socle_eval`."""
    return (basis or build_ring(x.g)).socle_eval(x)


def ab_evaluate(x: LambdaPoly, basis: LambdaBasis | None = None) -> Fraction:
    """Lambda_g-pairing value of x; see `LambdaBasis.ab_evaluate`."""
    return (basis or build_ring(x.g)).ab_evaluate(x)


def pairing_matrix(basis: LambdaBasis, k: int) -> QMatrix:
    """Pairing matrix in degree k; see `LambdaBasis.pairing_matrix`."""
    return basis.pairing_matrix(k)


def parse_lambda(text: str, g: int) -> LambdaPoly:
    """Parse text in the variables l1, ..., lg."""
    return LambdaPoly(g, parse_poly(text, lambda_ring(g)))


def coefficient_of(x: LambdaPoly, monom: Monomial) -> Fraction:
    """Coefficient of a lambda monomial in x."""
    return coefficient(x.expression, monom)
