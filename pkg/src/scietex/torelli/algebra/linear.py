"""
Dense exact linear algebra over the rationals.

`QMatrix` is sympy's `DomainMatrix` over `QQ`. Elimination is exact; the helpers below
translate to and from `Fraction` rows and wrap rank, nullspace and linear solving.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import NoSolution
from .polynomials import to_fraction, to_qq

QMatrix = DomainMatrix


def qmatrix(rows: Sequence[Sequence[Any]], cols: int | None = None) -> DomainMatrix:
    """
    Build a rational matrix.

    Args:
        rows (Sequence[Sequence[Any]]): Entries convertible to rationals.
        cols (int | None): Column count, needed only for matrices with no rows.

    Returns:
        DomainMatrix: Matrix over QQ.
    """
    n_cols = len(rows[0]) if rows else (cols or 0)
    data = [[to_qq(x) for x in row] for row in rows]
    return DomainMatrix(data, (len(data), n_cols), QQ)


def to_rows(m: DomainMatrix) -> list[list[Fraction]]:
    """Entries of a matrix as Fractions."""
    return [[to_fraction(x) for x in row] for row in m.to_list()]


def rank(m: DomainMatrix) -> int:
    """Exact rank."""
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return 0
    return m.rank()


def nullspace(m: DomainMatrix) -> list[list[Fraction]]:
    """
    Basis of the right kernel.

    Returns:
        list[list[Fraction]]: Kernel vectors, one per row.
    """
    rows, cols = m.shape
    if cols == 0:
        return []
    if rows == 0:
        return [[Fraction(int(i == j)) for j in range(cols)] for i in range(cols)]
    return to_rows(m.nullspace())


def is_nonsingular(m: DomainMatrix) -> bool:
    """True for square matrices of full rank (the empty matrix included)."""
    rows, cols = m.shape
    return rows == cols and rank(m) == rows


@dataclass(frozen=True)
class LinearSolution:
    """
    Solution set of A x = b: a particular solution plus a kernel basis.

    Attributes:
        particular (tuple[Fraction, ...]): One solution, free variables set to zero.
        kernel (tuple[tuple[Fraction, ...], ...]): Basis of the homogeneous solutions.
    """

    particular: tuple[Fraction, ...]
    kernel: tuple[tuple[Fraction, ...], ...]

    @property
    def unique(self) -> bool:
        """True if the solution set is a single point."""
        return not self.kernel


def solve_linear(a: DomainMatrix, b: Sequence[Any]) -> LinearSolution:
    """
    Solve A x = b exactly.

    Args:
        a (DomainMatrix): Coefficient matrix, m x n.
        b (Sequence[Any]): Right-hand side of length m.

    Raises:
        NoSolution: If the system is inconsistent.
        ValueError: If dimensions do not match.

    Returns:
        LinearSolution: Particular solution and kernel basis (an affine space when the
            kernel is nonempty).
    """
    m, n = a.shape
    if len(b) != m:
        raise ValueError(f"Right-hand side has length {len(b)}, expected {m}")
    if m == 0:
        return LinearSolution(tuple(Fraction(0) for _ in range(n)), tuple(map(tuple, nullspace(a))))
    column = DomainMatrix([[to_qq(x)] for x in b], (m, 1), QQ)
    reduced, pivots = a.hstack(column).rref()
    if n in pivots:
        raise NoSolution("Linear system is inconsistent")
    rows = reduced.to_list()
    solution = [Fraction(0)] * n
    for row_index, col in enumerate(pivots):
        solution[col] = to_fraction(rows[row_index][n])
    kernel = tuple(tuple(v) for v in nullspace(a))
    return LinearSolution(tuple(solution), kernel)
