import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy import QQ

from quartseq.algorithm.polyalg import (
    T,
    BinaryQuartic,
    polynomial_ring,
    quartic_invariants,
    scaled_discriminant,
)

coefficients = st.integers(min_value=-50, max_value=50)


def test_invariants_of_even_quartic() -> None:
    form = BinaryQuartic(1, 0, 3, 0, 1)
    I, J, discriminant = quartic_invariants(form)
    assert I == 21
    assert J == 162
    assert discriminant == QQ(4 * 21**3 - 162**2, 27)


def test_square_has_zero_discriminant() -> None:
    assert not BinaryQuartic(1, 2, 3, 2, 1).discriminant


@settings(max_examples=100, deadline=None)
@given(coefficients, coefficients, coefficients, coefficients, coefficients)
def test_discriminant_matches_resultant(A, B, C, D, E) -> None:
    assume(any((A, B, C, D, E)))
    assume(A or B)
    form = BinaryQuartic(A, B, C, D, E)
    assert form.discriminant == form.resultant_discriminant()


@settings(max_examples=50, deadline=None)
@given(coefficients, coefficients, coefficients, coefficients, coefficients)
def test_scaled_discriminant(A, B, C, D, E) -> None:
    assume(any((A, B, C, D, E)))
    form = BinaryQuartic(A, B, C, D, E)
    assert scaled_discriminant(*form.coefficients) == 27 * form.discriminant


def test_from_form_and_back() -> None:
    forms = polynomial_ring("p,q,w", QQ)
    p, q, w = forms.gens
    form = BinaryQuartic.from_form(2 * p**4 - p * w**3 + 5 * w**4, p, w)
    assert form.coefficients == (2, 0, 0, -1, 5)
    assert form.evaluate(QQ(1), QQ(1)) == 6
    assert form.reversed().coefficients == (5, -1, 0, 0, 2)


def test_from_form_rejects_other_generators() -> None:
    forms = polynomial_ring("p,q,w", QQ)
    p, q, w = forms.gens
    with pytest.raises(ValueError):
        BinaryQuartic.from_form(p**4 + q * w**3, p, w)


def test_zero_form() -> None:
    with pytest.raises(ValueError):
        BinaryQuartic(0, 0, 0, 0, 0)


def test_specialize() -> None:
    form = BinaryQuartic(T, 0, T**2, 0, 1)
    assert form.specialize(QQ(2)).coefficients == (2, 0, 4, 0, 1)
