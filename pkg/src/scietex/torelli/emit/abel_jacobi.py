"""
Pullbacks of theta and eta classes along Abel-Jacobi maps M_{g,n}^ct -> X_g^s.

The map is given by an integer s x n matrix A with zero row sums. The pullback of the theta
divisor along the vector v is

    theta(v) = 1/2 sum_i v_i^2 psi_i - 1/4 sum_{h=0..g} sum_{S} v_S^2 delta_{h,S},

the inner sum running over all subsets S of the markings, with v_S = sum_{i in S} v_i. Both
delta_{h,S} and delta_{g-h,S^c} occur in the sum; unstable divisors are dropped. The classes
eta_{ij} pull back to theta(a_i + a_j) - theta(a_i) - theta(a_j).
"""

from fractions import Fraction
from itertools import combinations
from logging import Logger, getLogger
from typing import Sequence

from ..config import ComputeConfigModel
from ..invariants import InvClass
from ..trees import Partition
from .constants import pr_prefactor
from .exceptions import BadMatrix, OutOfRange
from .strata import branch_leg, forget_pullback, restrict_to_split, split_vertex
from .taut_expr import (
    Decoration,
    DecoratedGraphTerm,
    StableTree,
    TautExpr,
    lambda_product,
    normalize_decoration,
)


def theta_pullback(v: Sequence[int], g: int) -> TautExpr:
    """
    Pullback of theta along the vector v.

    Args:
        v (Sequence[int]): Integer vector of length n >= 1.
        g (int): Genus.

    Returns:
        TautExpr: Degree-1 class on M_{g,n}^ct.
    """
    n = len(v)
    if n < 1:
        raise BadMatrix("Theta pullback needs at least one marking")
    trivial = StableTree.trivial(g, n)
    terms = [
        DecoratedGraphTerm(Fraction(x * x, 2), trivial, ((f"psi{i + 1}", 1),))
        for i, x in enumerate(v)
    ]
    for size in range(n + 1):
        for subset in combinations(range(1, n + 1), size):
            weight = sum(v[i - 1] for i in subset)
            if not weight:
                continue
            for h in range(g + 1):
                graph = StableTree.divisor(g, h, subset, n)
                if graph.is_stable():
                    terms.append(DecoratedGraphTerm(Fraction(-weight * weight, 4), graph))
    return TautExpr.build(g, n, terms)


def _check_matrix(a: Sequence[Sequence[int]]) -> int:
    if not a:
        raise BadMatrix("Matrix has no rows")
    n = len(a[0])
    for index, row in enumerate(a):
        if len(row) != n:
            raise BadMatrix(f"Row {index + 1} has length {len(row)}, expected {n}")
        if sum(row) != 0:
            raise BadMatrix(f"Row {index + 1} sums to {sum(row)}, rows must sum to zero")
    return n


def theta_matrix_pullback(a: Sequence[Sequence[int]], i: int, g: int) -> TautExpr:
    """Pullback of theta_i: theta of row i (1-based)."""
    _check_matrix(a)
    if not 1 <= i <= len(a):
        raise BadMatrix(f"Row index {i} outside 1..{len(a)}")
    return theta_pullback(a[i - 1], g)


def eta_pullback(a: Sequence[Sequence[int]], i: int, j: int, g: int) -> TautExpr:
    """
    Pullback of eta_{ij} along the Abel-Jacobi map of A.

    Args:
        a (Sequence[Sequence[int]]): s x n integer matrix with zero row sums.
        i (int): First row, 1-based.
        j (int): Second row, 1-based, different from i.
        g (int): Genus.

    Raises:
        BadMatrix: On a nonzero row sum or an invalid row pair.

    Returns:
        TautExpr: theta(a_i + a_j) - theta(a_i) - theta(a_j).
    """
    _check_matrix(a)
    if i == j:
        raise BadMatrix("eta_{ii} is theta_i; rows i and j must differ")
    if not (1 <= i <= len(a) and 1 <= j <= len(a)):
        raise BadMatrix(f"Row indices ({i}, {j}) outside 1..{len(a)}")
    row_i, row_j = a[i - 1], a[j - 1]
    combined = [x + y for x, y in zip(row_i, row_j)]
    return theta_pullback(combined, g) - theta_pullback(row_i, g) - theta_pullback(row_j, g)


def b_matrix(s: int) -> list[list[int]]:
    """s x 2s matrix of the classical map: row i is +1 at 2i-1 and -1 at 2i."""
    rows = []
    for i in range(s):
        row = [0] * (2 * s)
        row[2 * i], row[2 * i + 1] = 1, -1
        rows.append(row)
    return rows


def z_matrix(s: int) -> list[list[int]]:
    """s x (s+1) matrix: row i is -1 in column 1 and +1 in column i + 1."""
    rows = []
    for i in range(s):
        row = [0] * (s + 1)
        row[0], row[i + 1] = -1, 1
        rows.append(row)
    return rows


def pullback_class(x: InvClass, a: Sequence[Sequence[int]]) -> TautExpr:
    """
    Pullback of a degree <= 1 invariant class along A; products of divisors are not expanded.

    Raises:
        WrongDegree: If the class has terms outside degree 1.
        BadMatrix: If A has a nonzero row sum or the wrong row count.
    """
    n = _check_matrix(a)
    if len(a) != x.s:
        raise BadMatrix(f"Class has s={x.s} but the matrix has {len(a)} rows")
    result = TautExpr.zero(x.g, n)
    for (i, j), coeff in x.linear_coefficients().items():
        piece = theta_matrix_pullback(a, i, x.g) if i == j else eta_pullback(a, i, j, x.g)
        result = result + piece.scale(coeff)
    return result


def zero_section_pullback(x: TautExpr, root: int, row: Sequence[int]) -> TautExpr:
    """
    Product of x with aj^*[0] = theta - lambda_1 on the genus-1 vertex `root`.

    The vertex maps to its Jacobian by O(sum_i row_i x_i), x_i being the leg of `root` that
    leads to marking i. Weights of markings behind one leg add up, so when all of them leave
    through one leg only -lambda_1 remains.

    Raises:
        BadMatrix: If the row does not match the markings or does not sum to zero.
    """
    n = _check_matrix([row])
    if n != x.n:
        raise BadMatrix(f"Row has length {n}, expected {x.n}")
    terms = []
    for term in x.terms:
        graph, decoration = term.graph, term.decoration
        if graph.genera[root] != 1:
            raise BadMatrix(f"Vertex {root} has genus {graph.genera[root]}, expected 1")
        weights = {leg: 0 for leg in graph.legs[root]}
        for i, a in enumerate(row):
            weights[branch_leg(graph, root, i + 1)] += a

        def add(coeff: Fraction, stratum: StableTree, extra: Decoration) -> None:
            dec = normalize_decoration(decoration + extra)
            terms.append(DecoratedGraphTerm(coeff * term.coefficient, stratum, dec))

        add(Fraction(-1), graph, ((f"lam1v{root}", 1),))
        for leg, w in weights.items():
            if w:
                add(Fraction(w * w, 2), graph, ((f"psi{leg}", 1),))
        legs = graph.legs[root]
        for size in range(1, len(legs)):
            for rest in combinations(legs[1:], size - 1):
                subset = (legs[0],) + rest
                weight = sum(weights[leg] for leg in subset)
                if not weight:
                    continue
                for h in range(2):
                    split, new = split_vertex(graph, root, h, subset)
                    if not split.is_stable():
                        continue
                    for coeff, dec in restrict_to_split(decoration, root, new):
                        terms.append(
                            DecoratedGraphTerm(
                                Fraction(-weight * weight, 2) * coeff * term.coefficient,
                                split,
                                dec,
                            )
                        )
    return TautExpr.build(x.g, x.n, terms)


def pr_pullback(
    g: int,
    config: ComputeConfigModel | None = None,
    logger: Logger | None = None,
) -> TautExpr:
    """
    aj^*[PR_{g,1}] on M_{g,2}^ct for (C, p_1, p_2) -> (Jac C, O(p_1 - p_2)).

    The Torelli pullback of A_{g-1} x A_1 is a sum over colored trees T; every term is pulled
    back to M_{g,2}^ct along the forgetful maps and multiplied by the pullback of the zero
    section from the genus-1 vertex of color 2.

    Args:
        g (int): Genus, at least 2.
        config (ComputeConfigModel | None): Worker count and rank cap of the tree sum.
        logger (Logger | None): Progress logger.

    Raises:
        OutOfRange: If g < 2.

    Returns:
        TautExpr: Homogeneous class of degree g.
    """
    # excess imports emit.taut_expr, so the import waits until emit is loaded
    from ..excess import pullback_terms

    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    if g < 2:
        raise OutOfRange(f"The product locus PR_(g,1) needs g >= 2, got {g}")
    row = b_matrix(1)[0]
    result = TautExpr.zero(g, 2)
    for term in pullback_terms(Partition((g - 1, 1)), config, logger):
        marked = forget_pullback(forget_pullback(term.expression))
        result = result + zero_section_pullback(marked, term.tree.colors.index(2), row)
    logger.debug("aj^*[PR_(%d,1)] has %d terms", g, len(result))
    return result


def delta_class(
    g: int,
    config: ComputeConfigModel | None = None,
    logger: Logger | None = None,
) -> TautExpr:
    """
    Delta_{g,1} = aj_B^*([PR_{g,1}] - taut^1([PR_{g,1}])) on M_{g,2}^ct.

    The first part is `pr_pullback`. The tautological projection of [PR_{g,1}] is the
    prefactor times theta times lambda_{g-1}, and its pullback is built from the theta
    pullback of the row of B. Both parts have degree g.

    Raises:
        OutOfRange: If g < 2.
    """
    exact = pr_pullback(g, config, logger)
    theta = theta_matrix_pullback(b_matrix(1), 1, g)
    projected = lambda_product(theta, g - 1).scale(pr_prefactor(g, 1))
    return exact - projected
