"""
Pushforwards of exceptional monomials along the blowups tau: M~_{2,k} -> M_{2,k}^ct.

E_I is the exceptional divisor over the locus Z_I of curves with a rational bridge carrying
the markings I between two genus-1 components, and E_i = sum_{I containing i} E_I. The values
are stored tables for k <= 3; the tables are closed under relabeling of the markings. Classes
are combinations of strata Z_I, optionally decorated by the cotangent class psi_q at a node
between the bridge and a genus-1 component.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from ..config.defaults import DEFAULT_BLOWUP_MAX_MARKINGS
from .exceptions import MissingTable, OutOfTable

Monomial = tuple[int, ...]

_FACTOR = re.compile(r"^E(?P<index>\d+)(?:\^(?P<exponent>\d+))?$")


@dataclass(frozen=True)
class StratumTerm:
    """
    Coefficient times a possibly psi-decorated stratum.

    Attributes:
        coefficient (Fraction): Rational coefficient.
        stratum (tuple[int, ...]): The set I of Z_I; empty for the fundamental class.
        psi (str | None): Node label ("q1", "q2") of a psi decoration.
    """

    coefficient: Fraction
    stratum: tuple[int, ...] = ()
    psi: str | None = None

    def relabel(self, sigma: tuple[int, ...]) -> "StratumTerm":
        """Apply a permutation of the markings, sigma[i - 1] being the image of i."""
        return StratumTerm(
            self.coefficient, tuple(sorted(sigma[i - 1] for i in self.stratum)), self.psi
        )

    def __str__(self) -> str:
        if not self.stratum:
            body = "1"
        else:
            body = "Z{" + ",".join(str(i) for i in self.stratum) + "}"
        if self.psi is not None:
            body = f"psi_{self.psi}|{body}"
        if self.coefficient == 1:
            return body
        if self.coefficient == -1:
            return f"-{body}"
        return f"{self.coefficient}*{body}"


@dataclass(frozen=True)
class ExceptionalClass:
    """Sum of stratum terms; the empty sum is zero."""

    terms: tuple[StratumTerm, ...] = ()

    def is_zero(self) -> bool:
        """True for the zero class."""
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        text = str(self.terms[0])
        for term in self.terms[1:]:
            body = str(term)
            text += f" - {body[1:]}" if body.startswith("-") else f" + {body}"
        return text


def _class(*terms: tuple[int, tuple[int, ...], str | None]) -> ExceptionalClass:
    return ExceptionalClass(tuple(StratumTerm(Fraction(c), s, p) for c, s, p in terms))


_FUNDAMENTAL = _class((1, (), None))
_ZERO = ExceptionalClass()

_BASE_TABLES: dict[str, dict[Monomial, ExceptionalClass]] = {
    "M21": {
        (0,): _FUNDAMENTAL,
        (2,): _class((-1, (1,), None)),
    },
    "M22": {
        (0, 0): _FUNDAMENTAL,
        (1, 0): _ZERO,
        (1, 1): _class((-1, (1, 2), None)),
        (2, 0): _class((-1, (1,), None), (-1, (1, 2), None)),
        (2, 1): _class((-1, (1,), "q1"), (1, (1, 2), "q1"), (1, (1, 2), "q2")),
        (3, 0): _class((-1, (1,), "q1"), (1, (1, 2), "q1"), (1, (1, 2), "q2")),
        (3, 1): _ZERO,
    },
    "M23": {
        (0, 0, 0): _FUNDAMENTAL,
        (1, 0, 0): _ZERO,
        (1, 1, 0): _class((-1, (1, 2), None), (-1, (1, 2, 3), None)),
        (1, 1, 1): _class(
            (-1, (1, 2), "q1"),
            (-1, (1, 3), "q1"),
            (-1, (2, 3), "q1"),
            (1, (1, 2, 3), "q1"),
            (1, (1, 2, 3), "q2"),
        ),
    },
}

# Cases where every monomial outside the table pushes forward to zero.
_ZERO_OUTSIDE = {"M21"}


def _sorted_class(value: ExceptionalClass) -> ExceptionalClass:
    return ExceptionalClass(
        tuple(sorted(value.terms, key=lambda t: (len(t.stratum), t.stratum, t.psi or "")))
    )


def _with_relabelings(base: dict[Monomial, ExceptionalClass]) -> dict[Monomial, ExceptionalClass]:
    k = len(next(iter(base)))
    table: dict[Monomial, ExceptionalClass] = {}
    for monom, value in base.items():
        for sigma in permutations(range(1, k + 1)):
            image = [0] * k
            for i, e in enumerate(monom):
                image[sigma[i] - 1] = e
            key = tuple(image)
            if key not in table:
                table[key] = _sorted_class(
                    ExceptionalClass(tuple(t.relabel(sigma) for t in value.terms))
                )
    return table


_TABLES = {case: _with_relabelings(base) for case, base in _BASE_TABLES.items()}


def exceptional_cases() -> list[tuple[str, int]]:
    """Tabulated cases with their marking counts."""
    return [(case, len(next(iter(table)))) for case, table in sorted(_TABLES.items())]


def case_for_markings(k: int) -> str:
    """
    Name of the table for k markings.

    Raises:
        MissingTable: If no table is stored for k.
    """
    if not 1 <= k <= DEFAULT_BLOWUP_MAX_MARKINGS:
        raise MissingTable(
            f"No exceptional pushforward table for {k} markings,"
            f" tables cover 1..{DEFAULT_BLOWUP_MAX_MARKINGS}"
        )
    return f"M2{k}"


def parse_exceptional_monomial(text: str, k: int) -> Monomial:
    """
    Parse "E1^2*E2" into exponents (2, 1, 0, ...) of length k; "1" and "" are the unit.

    Raises:
        OutOfTable: On malformed factors or indices outside 1..k.
    """
    exponents = [0] * k
    text = text.strip()
    if text in ("", "1"):
        return tuple(exponents)
    for factor in text.replace(" ", "").split("*"):
        match = _FACTOR.match(factor)
        if match is None:
            raise OutOfTable(f"Cannot parse exceptional factor {factor!r}")
        index = int(match.group("index"))
        if not 1 <= index <= k:
            raise OutOfTable(f"E{index} does not exist for {k} markings")
        exponents[index - 1] += int(match.group("exponent") or 1)
    return tuple(exponents)


def exceptional_pushforward(case: str, monomial: str | Monomial) -> ExceptionalClass:
    """
    tau_* of a monomial in the exceptional classes E_i.

    Args:
        case (str): "M21", "M22" or "M23".
        monomial (str | Monomial): Text such as "E1*E2" or an exponent tuple.

    Raises:
        MissingTable: For an unknown case.
        OutOfTable: For a monomial outside the stored table.

    Returns:
        ExceptionalClass: The pushforward.
    """
    try:
        table = _TABLES[case]
    except KeyError as exc:
        raise MissingTable(f"Unknown exceptional case {case!r}") from exc
    k = len(next(iter(table)))
    monom = (
        parse_exceptional_monomial(monomial, k) if isinstance(monomial, str) else tuple(monomial)
    )
    if len(monom) != k or any(e < 0 for e in monom):
        raise OutOfTable(f"Monomial {monom} does not fit {k} markings")
    if monom in table:
        return table[monom]
    if case in _ZERO_OUTSIDE:
        return _ZERO
    raise OutOfTable(f"Monomial {monom} is outside the {case} table")


def blowup_component_count(k: int) -> int:
    """Number of irreducible components of Z_1 u ... u Z_k: (3^k - 2^k - 1) / 2 + 1."""
    if k < 1:
        raise ValueError(f"Need k >= 1, got {k}")
    return (3**k - 2**k - 1) // 2 + 1


@dataclass(frozen=True)
class BlowupComponent:
    """
    Component Z of the blowup center: the markings on the rational bridge and the unordered
    split of the remaining markings between the two genus-1 sides.

    Attributes:
        bridge (tuple[int, ...]): Nonempty set of markings on the bridge.
        sides (tuple[tuple[int, ...], tuple[int, ...]]): The two sides, larger first.
    """

    bridge: tuple[int, ...]
    sides: tuple[tuple[int, ...], tuple[int, ...]]


def blowup_components(k: int) -> list[BlowupComponent]:
    """Brute-force list of the components for k markings."""
    if k < 1:
        raise ValueError(f"Need k >= 1, got {k}")
    found = set()
    for assignment in product(range(3), repeat=k):
        bridge = tuple(i + 1 for i, a in enumerate(assignment) if a == 0)
        if not bridge:
            continue
        first = tuple(i + 1 for i, a in enumerate(assignment) if a == 1)
        second = tuple(i + 1 for i, a in enumerate(assignment) if a == 2)
        if (len(first), first) < (len(second), second):
            first, second = second, first
        found.add(BlowupComponent(bridge, (first, second)))
    return sorted(found, key=lambda c: (len(c.bridge), c.bridge, c.sides))
