"""
I-functions of the legs of a star graph.

    I_{h,mu}(z) = 1/|Aut(mu)| * [ prod_{j=1..r} Lambda^dual(z - alpha_j)
                                  / prod_{k=1..len(mu)} (z - psi_k - H_k) ]_{z >= 0},

with Lambda^dual(t) = sum_{i=0..h} (-1)^i lambda_i t^(h-i). Writing x_k = psi_k + H_k, the
expansion 1 / prod_k (z - x_k) = sum_{n >= 0} h_n(x) z^(-len(mu) - n) in complete homogeneous
polynomials makes the retained part exact:

    [z^j] I = 1/|Aut(mu)| * sum_a N_a h_{a - len(mu) - j}(x),

N_a being the coefficient of z^a in the numerator.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from sympy.polys.rings import PolyElement, PolyRing

from ..algebra import constant, gen, poly_ring, render
from .exceptions import UnsupportedR


@dataclass(frozen=True)
class IFunctionSeries:
    """
    Retained part of an I-function.

    Attributes:
        h (int): Leg genus, the rank of the Hodge bundle.
        mu (tuple[int, ...]): Contact partition.
        r (int): Target dimension.
        coefficients (tuple[PolyElement, ...]): Coefficient of z^j at index j; empty when the
            z-degree is negative.
    """

    h: int
    mu: tuple[int, ...]
    r: int
    coefficients: tuple[PolyElement, ...]

    @property
    def z_degree(self) -> int:
        """r h - len(mu)."""
        return z_degree(self.h, self.mu, self.r)

    def is_constant(self) -> bool:
        """True when no positive power of z survives."""
        return len(self.coefficients) <= 1

    def as_polynomial(self) -> PolyElement:
        """sum_j coefficient_j z^j in the symbol ring extended by z."""
        r = series_ring(self.h, self.mu, self.r)
        target = poly_ring(tuple(str(s) for s in r.symbols) + ("z",))
        z = gen(target, "z")
        result = target.zero
        for j, coeff in enumerate(self.coefficients):
            result += coeff.set_ring(target) * z**j
        return result

    def __str__(self) -> str:
        return render(self.as_polynomial())


def z_degree(h: int, mu: Sequence[int], r: int) -> int:
    """Top power of z in the I-function: r h - len(mu)."""
    return r * h - len(mu)


def aut_order_partition(mu: Sequence[int]) -> int:
    """|Aut(mu)| = prod over distinct parts of multiplicity!."""
    result = 1
    for count in Counter(mu).values():
        result *= factorial(count)
    return result


def series_names(h: int, mu: Sequence[int], r: int) -> tuple[str, ...]:
    """Symbols lam1..lam_h, psi1..psi_l, H1..H_l, a1..a_r."""
    length = len(mu)
    return (
        tuple(f"lam{i + 1}" for i in range(h))
        + tuple(f"psi{k + 1}" for k in range(length))
        + tuple(f"H{k + 1}" for k in range(length))
        + tuple(f"a{j + 1}" for j in range(r))
    )


def series_ring(h: int, mu: Sequence[int], r: int) -> PolyRing:
    """Ring of the I-function coefficients."""
    return poly_ring(series_names(h, mu, r))


def complete_homogeneous(xs: Sequence[PolyElement], top: int, r: PolyRing) -> list[PolyElement]:
    """h_0, ..., h_top of the given polynomials."""
    values = [r.one] + [r.zero] * top
    for x in xs:
        updated = []
        for n in range(top + 1):
            total = r.zero
            power = r.one
            for i in range(n + 1):
                total += values[n - i] * power
                power *= x
            updated.append(total)
        values = updated
    return values


def numerator_coefficients(h: int, r: int, ring: PolyRing) -> list[PolyElement]:
    """Coefficients N_0, ..., N_{rh} of prod_j Lambda^dual(z - alpha_j) as a polynomial in z."""
    lam = [ring.one] + [gen(ring, f"lam{i + 1}") for i in range(h)]
    result = [ring.one]
    for j in range(r):
        alpha = gen(ring, f"a{j + 1}")
        factor = [ring.zero] * (h + 1)
        for i in range(h + 1):
            sign = 1 if i % 2 == 0 else -1
            exponent = h - i
            # (z - alpha)^exponent = sum_b C(exponent, b) z^b (-alpha)^(exponent - b)
            for b in range(exponent + 1):
                factor[b] += lam[i] * (-alpha) ** (exponent - b) * (sign * comb(exponent, b))
        product = [ring.zero] * (len(result) + h)
        for a, left in enumerate(result):
            for b, right in enumerate(factor):
                product[a + b] += left * right
        result = product
    return result


def i_function(h: int, mu: Sequence[int], r: int) -> IFunctionSeries:
    """
    Retained part of I_{h,mu}(z).

    Args:
        h (int): Leg genus, h >= 0.
        mu (Sequence[int]): Nonempty contact partition.
        r (int): Target dimension, 1 or 2.

    Raises:
        UnsupportedR: If r is not 1 or 2.

    Returns:
        IFunctionSeries: Exact coefficients of z^0, ..., z^(rh - len(mu)).
    """
    if r not in (1, 2):
        raise UnsupportedR(f"Only r = 1 and r = 2 are supported, got r = {r}")
    if h < 0 or not mu:
        raise ValueError(f"Need h >= 0 and a nonempty partition, got h = {h}, mu = {mu}")
    mu = tuple(mu)
    ring = series_ring(h, mu, r)
    top = z_degree(h, mu, r)
    if top < 0:
        return IFunctionSeries(h, mu, r, ())
    length = len(mu)
    numerator = numerator_coefficients(h, r, ring)
    xs = [gen(ring, f"psi{k + 1}") + gen(ring, f"H{k + 1}") for k in range(length)]
    complete = complete_homogeneous(xs, top, ring)
    scale = constant(ring, Fraction(1, aut_order_partition(mu)))
    coefficients = []
    for j in range(top + 1):
        total = ring.zero
        for a in range(length + j, len(numerator)):
            total += numerator[a] * complete[a - length - j]
        coefficients.append(total * scale)
    return IFunctionSeries(h, mu, r, tuple(coefficients))
