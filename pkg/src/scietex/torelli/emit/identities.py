"""
Divisor-sum identities behind the Noether-Lefschetz projections.

The projection of the Noether-Lefschetz locus of degree d is nl_projection_coeff(g, d) times
lambda_{g-1}, and summing the Hecke translates of the product locus against sigma_1 must give
the Eisenstein coefficient sigma_{2g-1}(d) times the same class. Both sides carry the factor
g / (6 |B_{2g}|) lambda_{g-1}, so the check reduces to

    sum_{e | d} sigma_1(d / e) e^{2g-1} prod_{p | e} (1 - p^{2-2g}) = sigma_{2g-1}(d).
"""

from fractions import Fraction
from logging import Logger, getLogger

from sympy import divisor_sigma, divisors, primefactors


def sigma(r: int, n: int) -> int:
    """Divisor power sum sigma_r(n) = sum_{d | n} d^r."""
    if n < 1:
        raise ValueError(f"sigma is defined for n >= 1, got {n}")
    if r < 0:
        raise ValueError(f"sigma power must be non-negative, got {r}")
    return int(divisor_sigma(n, r))


def hecke_factor(g: int, e: int) -> Fraction:
    """e^{2g-1} prod_{p | e} (1 - p^{2-2g})."""
    value = Fraction(e) ** (2 * g - 1)
    for p in primefactors(e):
        value *= 1 - Fraction(1, p ** (2 * g - 2))
    return value


def eisenstein_lhs(g: int, d: int) -> Fraction:
    """Left-hand side of the divisor-sum identity at degree d."""
    return sum((sigma(1, d // e) * hecke_factor(g, e) for e in divisors(d)), Fraction(0))


def eisenstein_identity_check(g: int, d_max: int, logger: Logger | None = None) -> bool:
    """
    Check the divisor-sum identity for every 1 <= d <= d_max.

    Args:
        g (int): Genus, >= 2.
        d_max (int): Largest degree to check.
        logger (Logger | None): Logger for the first failing degree.

    Returns:
        bool: True if the identity holds for all degrees checked.
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    if g < 2:
        raise ValueError(f"Genus must be at least 2, got {g}")
    for d in range(1, d_max + 1):
        lhs = eisenstein_lhs(g, d)
        rhs = sigma(2 * g - 1, d)
        if lhs != rhs:
            logger.warning("Divisor-sum identity fails at g=%d, d=%d: %s != %d", g, d, lhs, rhs)
            return False
    return True
