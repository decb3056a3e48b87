"""
Star-shaped graphs of the wall-crossing formula for abelian targets of dimension r <= 2.

A star has a root of genus g0 and m legs (g_i, mu^i) attached to it; mu^i lists the contact
degrees of the leg with the root. The domain genus is

    g = sum_i (g_i + len(mu^i)) + g0 - m.

The catalogs:

- r = 1: g0 = 1 and every mu^i = (1);
- r = 2: either g0 = 2 with every mu^i = (1), or g0 = 1 with exactly one leg mu^i = (1, 1)
  and all other legs of genus 1 with mu^i = (1).
"""

import json
from collections import Counter
from dataclasses import dataclass
from logging import Logger, getLogger
from math import factorial
from typing import Any

from sympy.utilities.iterables import partitions

from .exceptions import InvalidStar, UnsupportedR

Leg = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class StarGraph:
    """
    Star-shaped graph.

    Attributes:
        r (int): Target dimension, 1 or 2.
        g0 (int): Root genus.
        legs (tuple[Leg, ...]): Pairs (g_i, mu^i) in canonical order.
    """

    r: int
    g0: int
    legs: tuple[Leg, ...]

    @property
    def m(self) -> int:
        """Number of legs."""
        return len(self.legs)

    @property
    def genus(self) -> int:
        """Genus of the glued domain."""
        return sum(g + len(mu) for g, mu in self.legs) + self.g0 - self.m

    @property
    def n_root_markings(self) -> int:
        """Number of points of the root glued to legs."""
        return sum(len(mu) for _, mu in self.legs)

    @property
    def is_exceptional(self) -> bool:
        """True when the unramified space is a blowup of M_{2,m}^ct."""
        return self.r == 2 and self.g0 == 2

    def sort_key(self) -> tuple:
        """Canonical order: higher root genus first, then fewer legs, then legs descending."""
        return (-self.g0, self.m, tuple((-len(mu), -g) for g, mu in self.legs))

    def __str__(self) -> str:
        legs = ", ".join(f"({g},{mu})" for g, mu in self.legs)
        return f"[g0={self.g0}; {legs}]"


def _leg_key(leg: Leg) -> tuple[int, int]:
    g, mu = leg
    return -len(mu), -g


def validate_star(star: StarGraph, g: int | None = None) -> None:
    """
    Check the shape rules of a star.

    Raises:
        UnsupportedR: If r is not 1 or 2.
        InvalidStar: On the first violated rule.
    """
    if star.r not in (1, 2):
        raise UnsupportedR(f"Only r = 1 and r = 2 are supported, got r = {star.r}")
    if not star.legs:
        raise InvalidStar("Star has no legs")
    if any(leg_g < 1 or not mu or any(p < 1 for p in mu) for leg_g, mu in star.legs):
        raise InvalidStar(f"Legs need positive genus and contact degrees: {star.legs}")
    pairs = [mu for _, mu in star.legs if mu == (1, 1)]
    singles = [mu for _, mu in star.legs if mu == (1,)]
    if len(pairs) + len(singles) != star.m:
        raise InvalidStar(f"Leg contact shapes must be (1) or (1,1): {star.legs}")
    if star.r == 1 and (star.g0 != 1 or pairs):
        raise InvalidStar("For r = 1 the root has genus 1 and every leg meets it once")
    if star.r == 2:
        if star.g0 == 2 and pairs:
            raise InvalidStar("A genus-2 root carries only (1)-legs")
        if star.g0 == 1:
            if len(pairs) != 1:
                raise InvalidStar("A genus-1 root carries exactly one (1,1)-leg")
            if any(leg_g != 1 for leg_g, mu in star.legs if mu == (1,)):
                raise InvalidStar("On a genus-1 root every (1)-leg has genus 1")
        if star.g0 not in (1, 2):
            raise InvalidStar(f"Root genus must be 1 or 2 for r = 2, got {star.g0}")
    if tuple(sorted(star.legs, key=_leg_key)) != star.legs:
        raise InvalidStar(f"Legs are not in canonical order: {star.legs}")
    if g is not None and star.genus != g:
        raise InvalidStar(f"Star has genus {star.genus}, expected {g}")


def make_star(r: int, g0: int, legs: list[Leg]) -> StarGraph:
    """Star with its legs put in canonical order."""
    return StarGraph(r, g0, tuple(sorted(((g, tuple(mu)) for g, mu in legs), key=_leg_key)))


def _genus_partitions(n: int) -> list[tuple[int, ...]]:
    if n < 0:
        return []
    result = []
    for multiplicities in partitions(n):
        parts = [p for p, k in multiplicities.items() for _ in range(k)]
        result.append(tuple(sorted(parts, reverse=True)))
    return result


def enumerate_stars(g: int, r: int, logger: Logger | None = None) -> list[StarGraph]:
    """
    Star graphs of the wall-crossing formula.

    Args:
        g (int): Domain genus, g >= r + 1.
        r (int): Target dimension, 1 or 2.
        logger (Logger | None): Receives warnings for graphs left out of the r = 2 catalog.

    Raises:
        UnsupportedR: If r is not 1 or 2.

    Returns:
        list[StarGraph]: One star per isomorphism class, in canonical order.
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    if r not in (1, 2):
        raise UnsupportedR(f"Only r = 1 and r = 2 are supported, got r = {r}")
    if g < r + 1:
        raise ValueError(f"Need g >= r + 1, got g = {g}, r = {r}")
    stars: list[StarGraph] = []
    if r == 1:
        for parts in _genus_partitions(g - 1):
            if parts:
                stars.append(make_star(1, 1, [(p, (1,)) for p in parts]))
    else:
        for parts in _genus_partitions(g - 2):
            if parts:
                stars.append(make_star(2, 2, [(p, (1,)) for p in parts]))
        for pair_genus in range(1, g - 1):
            for parts in _genus_partitions(g - 2 - pair_genus):
                legs = [(pair_genus, (1, 1))] + [(p, (1,)) for p in parts]
                star = make_star(2, 1, legs)
                if any(p != 1 for p in parts):
                    logger.warning("Star %s is not in the r = 2 catalog", star)
                    continue
                stars.append(star)
    for star in stars:
        validate_star(star, g)
    return sorted(stars, key=lambda s: s.sort_key())


def aut_order_star(star: StarGraph) -> int:
    """Order of the permutation group of equal legs: prod over distinct legs of mult!."""
    result = 1
    for count in Counter(star.legs).values():
        result *= factorial(count)
    return result


def star_to_dict(star: StarGraph) -> dict[str, Any]:
    """JSON-ready dictionary."""
    return {
        "r": star.r,
        "g0": star.g0,
        "legs": [{"g": g, "mu": list(mu)} for g, mu in star.legs],
    }


def star_from_dict(data: dict[str, Any]) -> StarGraph:
    """Inverse of `star_to_dict`; legs are reordered canonically and validated."""
    try:
        star = make_star(
            int(data["r"]),
            int(data["g0"]),
            [(int(leg["g"]), tuple(int(p) for p in leg["mu"])) for leg in data["legs"]],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidStar(f"Malformed star data: {exc}") from exc
    validate_star(star)
    return star


def star_to_json(star: StarGraph) -> str:
    """Compact JSON text."""
    return json.dumps(star_to_dict(star), separators=(",", ":"))


def star_from_json(text: str) -> StarGraph:
    """Parse text produced by `star_to_json`."""
    return star_from_dict(json.loads(text))
