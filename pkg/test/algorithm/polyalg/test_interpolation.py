import pytest
from sympy import QQ, ring

from quartseq.algorithm.polyalg import (
    T,
    domain_of,
    polynomial_ring,
    rational_root_interpolation,
    rational_roots,
)
from quartseq.commons.errors import NoRationalRoot

FLAT, FLAT_T, FLAT_V = ring("t,v", QQ)


def test_rational_roots() -> None:
    x = polynomial_ring("x", QQ).gens[0]
    poly = (x - QQ(1, 2)) ** 2 * (3 * x + 4) * (x**2 + 1)
    assert rational_roots(poly) == [QQ(-4, 3), QQ(1, 2)]


def test_rational_root_interpolation() -> None:
    D = (FLAT_V - FLAT_T**2) * (FLAT_V * (FLAT_T - 2) - (FLAT_T + 1))
    roots = rational_root_interpolation(D, seed=1)
    assert len(roots) == 2
    assert any(not (root - T**2) for root in roots)
    assert any(not (root - (T + 1) / (T - 2)) for root in roots)


def test_rational_root_interpolation_univariate() -> None:
    v = polynomial_ring("v", domain_of(T)).gens[0]
    D = v**2 - (T**2 + 2 * T + 1) / T**2
    roots = rational_root_interpolation(D, degree_bound=2)
    assert len(roots) == 2
    assert all(not (root**2 - (T + 1) ** 2 / T**2) for root in roots)


def test_rational_root_interpolation_without_roots() -> None:
    with pytest.raises(NoRationalRoot):
        rational_root_interpolation(FLAT_V**2 + FLAT_T**2 + 1, degree_bound=2)
