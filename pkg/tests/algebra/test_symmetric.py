"""Test symmetric-function conversions."""

import pytest

try:
    from src.scietex.torelli.algebra import (
        NotSymmetric,
        poly_ring,
        gen,
        is_symmetric,
        elementary_symmetric_rewrite,
        elementary_polynomials,
        power_sums_to_elementary,
        elementary_to_power_sums,
    )
except ModuleNotFoundError:
    from scietex.torelli.algebra import (
        NotSymmetric,
        poly_ring,
        gen,
        is_symmetric,
        elementary_symmetric_rewrite,
        elementary_polynomials,
        power_sums_to_elementary,
        elementary_to_power_sums,
    )


def test_is_symmetric() -> None:
    """
    Test the symmetry check.
    """
    r = poly_ring(("x1", "x2", "x3"))
    x1, x2, x3 = r.gens
    assert is_symmetric(x1 * x2 + x2 * x3 + x1 * x3, ["x1", "x2", "x3"])
    assert not is_symmetric(x1 * x2 + x3, ["x1", "x2", "x3"])
    assert is_symmetric(x1 + 2 * x2 + 2 * x3, ["x2", "x3"])
    assert is_symmetric(x1, ["x1"])


def test_rewrite() -> None:
    """
    Test the elementary rewrite keeps other variables as coefficients.
    """
    r = poly_ring(("c", "x1", "x2"))
    c, x1, x2 = r.gens
    result = elementary_symmetric_rewrite(x1**2 + x2**2 + c * (x1 + x2), ["x1", "x2"])
    target = poly_ring(("c", "e1", "e2"))
    tc, e1, e2 = target.gens
    assert result == e1**2 - 2 * e2 + tc * e1
    with pytest.raises(NotSymmetric):
        elementary_symmetric_rewrite(x1 - x2, ["x1", "x2"])


def test_rewrite_names() -> None:
    """
    Test custom names for the elementary variables.
    """
    r = poly_ring(("y1", "y2"))
    y1, y2 = r.gens
    result = elementary_symmetric_rewrite(y1 * y2, ["y1", "y2"], ["s1", "s2"])
    assert result == gen(poly_ring(("s1", "s2")), "s2")


def test_newton() -> None:
    """
    Test Newton's identities in both directions.
    """
    r = poly_ring(("x1", "x2", "x3"))
    roots = ["x1", "x2", "x3"]
    elementary = elementary_polynomials(r, roots)
    x1, x2, x3 = r.gens
    assert elementary == [x1 + x2 + x3, x1 * x2 + x1 * x3 + x2 * x3, x1 * x2 * x3]
    power_sums = [x1**k + x2**k + x3**k for k in range(1, 5)]
    assert elementary_to_power_sums(elementary, 4, r) == power_sums
    assert power_sums_to_elementary(power_sums[:3], r) == [r.one] + elementary
    # e_4 of three roots vanishes
    assert power_sums_to_elementary(power_sums, r)[4] == r.zero


if __name__ == "__main__":
    pytest.main()
