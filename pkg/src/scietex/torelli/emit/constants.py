"""
Closed-form constants.

Bernoulli numbers follow the convention B_2 = 1/6, B_4 = -1/30; absolute values are taken only
where the formulas below say so. The store provides the socle constants gamma_g, the stored
tables of taut([J_g]) for 2 <= g <= 8, the projections taut([A_{g_1} x ... x A_{g_k}]) for the
four product shapes of low codimension, the Noether-Lefschetz projection coefficient and the
prefactor of the tautological projection of the generalized product locus.
"""

from fractions import Fraction
from typing import Any, Callable

from sympy import bernoulli as sympy_bernoulli
from sympy import primefactors

from ..algebra import to_fraction
from ..config.defaults import DEFAULT_JG_MAX_GENUS
from ..invariants.projection import kappa, pr_prefactor as _pr_prefactor
from ..lambda_ring import LambdaPoly, gamma as lambda_gamma
from .exceptions import OutOfRange, UnknownConstant

# taut([J_g]) by genus: exponent vectors in lambda_1..lambda_g and their coefficients
_JG_TABLE: dict[int, dict[tuple[int, ...], Fraction]] = {
    2: {(0, 0): Fraction(1)},
    3: {(0, 0, 0): Fraction(2)},
    4: {(1, 0, 0, 0): Fraction(16)},
    5: {
        (1, 1, 0, 0, 0): Fraction(144),
        (0, 0, 1, 0, 0): Fraction(-96),
    },
    6: {
        (1, 1, 1, 0, 0, 0): Fraction(768),
        (0, 1, 0, 1, 0, 0): Fraction(-2304),
        (1, 0, 0, 0, 1, 0): Fraction(948096, 691),
    },
    7: {
        (1, 1, 1, 1, 0, 0, 0): Fraction(1536),
        (0, 1, 1, 0, 1, 0, 0): Fraction(-13824),
        (1, 0, 0, 1, 1, 0, 0): Fraction(4418304, 691),
        (1, 0, 1, 0, 0, 1, 0): Fraction(15044352, 691),
        (0, 0, 0, 1, 0, 1, 0): Fraction(-17685504, 691),
    },
    8: {
        (0, 1, 0, 0, 0, 1, 1, 0): Fraction(500106387456, 2499347),
        (0, 0, 1, 0, 1, 0, 1, 0): Fraction(-311646117888, 2499347),
        (1, 1, 0, 0, 1, 0, 1, 0): Fraction(-203316609024, 2499347),
        (1, 0, 1, 1, 0, 0, 1, 0): Fraction(139564449792, 2499347),
        (0, 0, 0, 1, 1, 1, 0, 0): Fraction(-14966784, 691),
        (1, 0, 1, 0, 1, 1, 0, 0): Fraction(25731072, 691),
        (0, 1, 1, 1, 0, 1, 0, 0): Fraction(-12533760, 691),
        (1, 1, 1, 1, 1, 0, 0, 0): Fraction(552960, 691),
    },
}


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n; B_1 is not used and follows the installed sympy convention."""
    if n < 0:
        raise OutOfRange(f"Bernoulli index must be non-negative, got {n}")
    return to_fraction(sympy_bernoulli(n))


def abs_bernoulli(n: int) -> Fraction:
    """|B_n|."""
    return abs(bernoulli(n))


def gamma(g: int) -> Fraction:
    """gamma_g = prod_{i=1..g} |B_{2i}| / (4i)."""
    if g < 1:
        raise OutOfRange(f"gamma_g needs g >= 1, got {g}")
    return lambda_gamma(g)


def jg_table(g: int) -> LambdaPoly:
    """
    Stored class taut([J_g]) in R*(A_g).

    Raises:
        OutOfRange: Outside 2 <= g <= 8.
    """
    if g < 2 or g > DEFAULT_JG_MAX_GENUS:
        raise OutOfRange(f"taut([J_g]) is stored for 2 <= g <= {DEFAULT_JG_MAX_GENUS}, got {g}")
    result = LambdaPoly.lam(g, 0) * 0
    for monom, coeff in _JG_TABLE[g].items():
        result = result + LambdaPoly.from_monomial(g, monom, coeff)
    return result


def _lam(g: int, i: int) -> LambdaPoly:
    return LambdaPoly.lam(g, i)


def taut_product(parts: tuple[int, ...]) -> LambdaPoly:
    """
    taut([A_{g_1} x ... x A_{g_k}]) in R*(A_g) for the shapes (1, g-1), (2, g-2), (3, g-3)
    and (1, 1, g-2), parts in any order.

    Raises:
        OutOfRange: For other shapes or too small genus.
    """
    g = sum(parts)
    shape = tuple(sorted(parts))
    b = abs_bernoulli
    if len(shape) == 2 and shape[0] == 1 and g >= 2:
        return _lam(g, g - 1) * (Fraction(g, 6) / b(2 * g))
    if len(shape) == 2 and shape[0] == 2 and g >= 4:
        factor = Fraction(1, 360) * g * (g - 1) / (b(2 * g) * b(2 * g - 2))
        return _lam(g, g - 1) * _lam(g, g - 3) * factor
    if len(shape) == 2 and shape[0] == 3 and g >= 6:
        factor = (
            Fraction(1, 45360) * g * (g - 1) * (g - 2) / (b(2 * g) * b(2 * g - 2) * b(2 * g - 4))
        )
        bracket = _lam(g, g - 4) * _lam(g, g - 4) - _lam(g, g - 3) * _lam(g, g - 5)
        return _lam(g, g - 1) * bracket * factor
    if len(shape) == 3 and shape[:2] == (1, 1) and g >= 3:
        factor = Fraction(1, 36) * g * (g - 1) / (b(2 * g) * b(2 * g - 2))
        return _lam(g, g - 1) * _lam(g, g - 2) * factor
    raise OutOfRange(f"No stored product formula for the partition {parts}")


def nl_projection_coeff(g: int, d: int) -> Fraction:
    """
    Coefficient of lambda_{g-1} in taut([NL_{g,d}]):
    d^(2g-1) g / (6 |B_{2g}|) prod_{p | d} (1 - p^(2-2g)).
    """
    if g < 2 or d < 1:
        raise OutOfRange(f"Need g >= 2 and d >= 1, got g={g}, d={d}")
    value = Fraction(d ** (2 * g - 1) * g, 6) / abs_bernoulli(2 * g)
    for p in primefactors(d):
        value *= 1 - Fraction(1, p ** (2 * g - 2))
    return value


def pr_prefactor(g: int, s: int) -> Fraction:
    """Scalar g / (6 kappa_{g,s} |B_{2g}|) in front of det(...) lambda_{g-1}."""
    if g < 2 or s < 0:
        raise OutOfRange(f"Need g >= 2 and s >= 0, got g={g}, s={s}")
    return _pr_prefactor(g, s)


class ConstantsStore:
    """
    Name-based access to the closed-form constants.

    Example:
        >>> ConstantsStore().get("gamma", g=2)
        Fraction(1, 5760)
    """

    def __init__(self) -> None:
        self._entries: dict[str, Callable[..., Any]] = {
            "bernoulli": bernoulli,
            "gamma": gamma,
            "jg_table": jg_table,
            "taut_product": taut_product,
            "nl_projection_coeff": nl_projection_coeff,
            "pr_prefactor": pr_prefactor,
            "kappa": kappa,
        }

    @property
    def names(self) -> list[str]:
        """Stored constant names."""
        return sorted(self._entries)

    def get(self, name: str, **params: Any) -> Any:
        """
        Evaluate a constant.

        Raises:
            UnknownConstant: If the name is not stored.
            OutOfRange: If the parameters are outside the valid range.
        """
        try:
            entry = self._entries[name]
        except KeyError as exc:
            raise UnknownConstant(
                f"Unknown constant {name!r}, expected one of {self.names}"
            ) from exc
        try:
            return entry(**params)
        except TypeError as exc:
            raise OutOfRange(f"Bad parameters {params} for constant {name!r}: {exc}") from exc


def constants(name: str, **params: Any) -> Any:
    """Module-level shortcut for `ConstantsStore().get`."""
    return ConstantsStore().get(name, **params)
