"""
Symmetric-function conversions.

`elementary_symmetric_rewrite` expresses a polynomial that is symmetric in a set of root
variables through the elementary symmetric polynomials of those roots; other variables ride
along as coefficients. Newton's identities convert between power sums and elementary
symmetric polynomials; they drive Chern classes of tensor products.
"""

from typing import Sequence

from sympy import Symbol
from sympy.polys.polyfuncs import symmetrize
from sympy.polys.rings import PolyElement, PolyRing

from .exceptions import NotSymmetric
from .polynomials import gen, poly_ring, ring_names


def _swap(p: PolyElement, first: str, second: str) -> PolyElement:
    a, b = gen(p.ring, first), gen(p.ring, second)
    return p.compose([(a, b), (b, a)])


def _cycle(p: PolyElement, roots: Sequence[str]) -> PolyElement:
    gens = [gen(p.ring, name) for name in roots]
    return p.compose(list(zip(gens, gens[1:] + gens[:1])))


def is_symmetric(p: PolyElement, roots: Sequence[str]) -> bool:
    """
    Check invariance under the permutations of `roots`.

    The transposition of the first two roots and the full cycle generate the symmetric group,
    so two comparisons suffice.
    """
    if len(roots) < 2:
        return True
    return _swap(p, roots[0], roots[1]) == p and _cycle(p, roots) == p


def elementary_symmetric_rewrite(
    p: PolyElement,
    roots: Sequence[str],
    e_names: Sequence[str] | None = None,
) -> PolyElement:
    """
    Rewrite a root-symmetric polynomial in elementary symmetric variables.

    Args:
        p (PolyElement): Polynomial symmetric in `roots`.
        roots (Sequence[str]): Names of the root variables of `p.ring`.
        e_names (Sequence[str] | None): Names of the new variables e_1, ..., e_r,
            "e1", "e2", ... when None.

    Raises:
        NotSymmetric: If `p` is not invariant under permutations of `roots`.

    Returns:
        PolyElement: Polynomial in the non-root variables of `p.ring` followed by `e_names`.
    """
    roots = list(roots)
    if e_names is None:
        e_names = [f"e{i + 1}" for i in range(len(roots))]
    others = [name for name in ring_names(p.ring) if name not in roots]
    target = poly_ring(tuple(others) + tuple(e_names))
    if not roots:
        return p.set_ring(target)
    if not is_symmetric(p, roots):
        raise NotSymmetric(f"Polynomial is not symmetric in {roots}")
    root_symbols = [p.ring.symbols[ring_names(p.ring).index(name)] for name in roots]
    e_symbols = [Symbol(name) for name in e_names]
    symmetric, remainder, _ = symmetrize(
        p.as_expr(), *root_symbols, formal=True, symbols=e_symbols
    )
    if remainder != 0:
        raise NotSymmetric(f"Symmetric reduction left remainder {remainder}")
    return target.from_expr(symmetric)


def elementary_polynomials(r: PolyRing, roots: Sequence[str]) -> list[PolyElement]:
    """
    Elementary symmetric polynomials e_1, ..., e_n of the named roots, as elements of `r`.
    """
    result = [r.one]
    for name in roots:
        x = gen(r, name)
        result = [
            (result[k] if k < len(result) else r.zero)
            + (x * result[k - 1] if k >= 1 else r.zero)
            for k in range(len(result) + 1)
        ]
    return result[1:]


def power_sums_to_elementary(power_sums: Sequence[PolyElement], r: PolyRing) -> list[PolyElement]:
    """
    Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.

    Args:
        power_sums (Sequence[PolyElement]): p_1, ..., p_n.
        r (PolyRing): Ring of the values.

    Returns:
        list[PolyElement]: e_0 = 1, e_1, ..., e_n.
    """
    elementary = [r.one]
    for k in range(1, len(power_sums) + 1):
        total = r.zero
        for i in range(1, k + 1):
            term = elementary[k - i] * power_sums[i - 1]
            total += term if i % 2 == 1 else -term
        elementary.append(total.quo_ground(k))
    return elementary


def elementary_to_power_sums(
    elementary: Sequence[PolyElement], count: int, r: PolyRing
) -> list[PolyElement]:
    """
    Newton's identities: p_k = (-1)^(k-1) k e_k + sum_{i=1..k-1} (-1)^(k-1+i) e_{k-i} p_i.

    Args:
        elementary (Sequence[PolyElement]): e_1, ..., e_n; e_k = 0 beyond n.
        count (int): Number of power sums wanted.
        r (PolyRing): Ring of the values.

    Returns:
        list[PolyElement]: p_1, ..., p_count.
    """

    def e(k: int) -> PolyElement:
        if k == 0:
            return r.one
        return elementary[k - 1] if k <= len(elementary) else r.zero

    power_sums: list[PolyElement] = []
    for k in range(1, count + 1):
        total = e(k) * k if (k - 1) % 2 == 0 else -e(k) * k
        for i in range(1, k):
            term = e(k - i) * power_sums[i - 1]
            total += term if (k - 1 + i) % 2 == 0 else -term
        power_sums.append(total)
    return power_sums
