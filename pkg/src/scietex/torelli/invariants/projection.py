"""
Capelli differentiation and the tautological projection of generalized product loci.

The Capelli identity det(D) det(M)^g = kappa_{g,s} det(M)^(g-1), with D_ij = 2^(delta_ij - 1)
d/dm_ij and kappa_{g,s} = prod_{k=0..s-1} (g + k/2), yields the class of PR_{g,s} in I_{g,s}
as det(Theta) / kappa_{g,s}, where Theta has theta_i on the diagonal and eta_{ij}/2 off it.
`project_pr_solve` recovers the same class from the integrals alone.
"""

from fractions import Fraction
from itertools import permutations
from logging import Logger, getLogger

from sympy import bernoulli
from sympy.combinatorics import Permutation
from sympy.polys.rings import PolyElement

from ..algebra import NoSolution, constant, qmatrix, solve_linear, to_fraction, to_qq
from ..config import ComputeConfigModel
from ..lambda_ring import LambdaPoly
from .exceptions import SingularSystem
from .ring import (
    InvClass,
    Sym2Index,
    _exponent_factorial,
    _product_monomial,
    _symmetric_det,
    check_caps,
    det_matrix,
    det_power,
    integrate_monomial,
    inv_ring,
    matrix_names,
    matrix_ring,
    monomials,
    quotient_basis,
)


def kappa(g: int, s: int) -> Fraction:
    """kappa_{g,s} = prod_{k=0..s-1} (g + k/2); 1 for s = 0."""
    value = Fraction(1)
    for k in range(s):
        value *= g + Fraction(k, 2)
    return value


def _apply_capelli(f: PolyElement, s: int) -> PolyElement:
    r = f.ring
    names = matrix_names(s)
    result = r.zero
    for sigma in permutations(range(s)):
        term = f
        factor = Fraction(Permutation(list(sigma)).signature())
        for i, j in enumerate(sigma):
            index = Sym2Index.of(i + 1, j + 1)
            var = r.gens[names.index(f"m{index.i}{index.j}")]
            if i != j:
                factor /= 2
            term = term.diff(var)
            if not term:
                break
        if term:
            result += term * constant(r, factor)
    return result


def capelli_check(g: int, s: int) -> bool:
    """
    Check det(D) det(M)^g = kappa_{g,s} det(M)^(g-1) exactly.

    Args:
        g (int): Exponent, g >= 1.
        s (int): Matrix size, s >= 1.

    Returns:
        bool: True when the identity holds.
    """
    if g < 1 or s < 1:
        raise ValueError(f"Need g >= 1 and s >= 1, got g={g}, s={s}")
    det = det_matrix(s)
    lhs = _apply_capelli(det**g, s)
    rhs = det ** (g - 1) * constant(matrix_ring(s), kappa(g, s))
    return lhs == rhs


def project_pr_formula(g: int, s: int) -> InvClass:
    """
    Closed form det(Theta) / kappa_{g,s} of the projection of the generalized product locus.
    """
    if g < 1 or s < 0:
        raise ValueError(f"Need g >= 1 and s >= 0, got g={g}, s={s}")
    r = inv_ring(s)
    det = _symmetric_det(r, s, Fraction(1, 2))
    return InvClass(g, s, det * constant(r, 1 / kappa(g, s)))


def project_pr_solve(
    g: int,
    s: int,
    config: ComputeConfigModel | None = None,
    logger: Logger | None = None,
) -> InvClass:
    """
    Degree-s class rho with integral(rho * eta^a / a!) = [m^a] det(M)^(g-1) for all a of
    degree gs - s, found by an exact linear solve.

    Raises:
        SingularSystem: If the system is inconsistent or underdetermined.
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    check_caps(g, s, config, logger)
    basis = quotient_basis(g, s, s)
    targets = det_power(g - 1, s)
    rows, rhs = [], []
    for a in monomials(s, g * s - s):
        scale = Fraction(1, _exponent_factorial(a))
        rows.append(
            [integrate_monomial(g, s, _product_monomial(b, a)) * scale for b in basis]
        )
        rhs.append(targets.get(a, Fraction(0)))
    try:
        solution = solve_linear(qmatrix(rows, cols=len(basis)), rhs)
    except NoSolution as exc:
        raise SingularSystem(f"No projection class for (g, s) = ({g}, {s})") from exc
    if not solution.unique:
        raise SingularSystem(f"Projection class for (g, s) = ({g}, {s}) is not unique")
    logger.debug("Solved projection for (g, s) = (%d, %d) over %d monomials", g, s, len(basis))
    r = inv_ring(s)
    expression = r.zero
    for monom, c in zip(basis, solution.particular):
        if c:
            expression += r.from_dict({monom: to_qq(c)})
    return InvClass(g, s, expression)


def pr_prefactor(g: int, s: int) -> Fraction:
    """g / (6 kappa_{g,s} |B_{2g}|)."""
    if g < 1 or s < 0:
        raise ValueError(f"Need g >= 1 and s >= 0, got g={g}, s={s}")
    return Fraction(g) / (6 * kappa(g, s) * abs(to_fraction(bernoulli(2 * g))))


def pr_projection(g: int, s: int) -> tuple[InvClass, LambdaPoly]:
    """
    Tautological projection of PR_{g,s} in R*(A_g) (x) I_{g,s}, as the pair
    (prefactor * det(Theta), lambda_{g-1}).
    """
    if g < 2 or s < 0:
        raise ValueError(f"Need g >= 2 and s >= 0, got g={g}, s={s}")
    r = inv_ring(s)
    det = _symmetric_det(r, s, Fraction(1, 2))
    vertical = InvClass(g, s, det * constant(r, pr_prefactor(g, s)))
    return vertical, LambdaPoly.lam(g, g - 1)


def pr_general_r(g: int, s: int, r: int) -> InvClass:
    """det(Theta)^r / (kappa_{g,s} kappa_{g-1,s} ... kappa_{g-r+1,s})."""
    if not 1 <= r <= max(g - 1, 1):
        raise ValueError(f"Need 1 <= r <= g - 1, got g={g}, r={r}")
    ring = inv_ring(s)
    det = _symmetric_det(ring, s, Fraction(1, 2))
    denominator = Fraction(1)
    for j in range(r):
        denominator *= kappa(g - j, s)
    return InvClass(g, s, det**r * constant(ring, 1 / denominator))


def taut_product_pr(g: int, s: int, r: int) -> tuple[InvClass, LambdaPoly]:
    """
    taut^s([A_r x X_{g-r}^s]) as (det(Theta)^r / prod kappa, taut([A_r x A_{g-r}])) for
    r <= 3.
    """
    from ..emit.constants import taut_product  # pylint: disable=import-outside-toplevel

    if not 1 <= r <= 3:
        raise ValueError(f"Stored product formulas cover 1 <= r <= 3, got {r}")
    return pr_general_r(g, s, r), taut_product((r, g - r))
