import pytest
from sympy import QQ

from quartseq.algorithm.polyalg import (
    T,
    coefficient,
    domain_of,
    evaluate_at,
    format_function,
    is_symbolic,
    parse_scalar,
    polynomial_ring,
    specialize,
    substitute,
)
from quartseq.commons.errors import RecordParseError, SingularSpecialization


def test_domain_of() -> None:
    assert domain_of(QQ(1), QQ(2)) == QQ
    assert domain_of(QQ(1), T) != QQ
    assert is_symbolic(T + 1)
    assert not is_symbolic(QQ(3, 4))


@pytest.mark.parametrize(
    "value,text",
    [
        (QQ(3, 4), "3/4"),
        ((T**2 + 1) / (T - 2), "(t**2 + 1)/(t - 2)"),
        (T**3 - 2 * T, "(t**3 - 2*t)"),
    ],
)
def test_format_function(value, text) -> None:
    assert format_function(value) == text
    assert parse_scalar(text) == value


def test_format_function_monic_denominator() -> None:
    value = (T + 1) / (2 * T - 4)
    text = format_function(value)
    assert text == "(1/2*t + 1/2)/(t - 2)"
    assert parse_scalar(text) == value


def test_parse_scalar_malformed() -> None:
    with pytest.raises(RecordParseError):
        parse_scalar("(t + )")


def test_specialize() -> None:
    assert specialize((T**2 + 1) / (T - 2), QQ(3)) == QQ(10)
    assert specialize(QQ(5, 7), QQ(3)) == QQ(5, 7)


def test_specialize_at_pole() -> None:
    with pytest.raises(SingularSpecialization):
        specialize(1 / (T - 2), QQ(2))


def test_evaluate_at_and_coefficient() -> None:
    x = polynomial_ring("x", QQ).gens[0]
    poly = 3 * x**4 - x**2 + 5
    assert evaluate_at(poly, QQ(2)) == QQ(49)
    assert coefficient(poly, 2) == QQ(-1)
    assert coefficient(poly, 3) == QQ(0)


def test_evaluate_at_symbolic() -> None:
    x = polynomial_ring("x", domain_of(T)).gens[0]
    poly = x**2 + T
    assert evaluate_at(poly, T) == T**2 + T


def test_substitute() -> None:
    forms = polynomial_ring("p,q,w", QQ)
    p, q, w = forms.gens
    assert substitute(p**2 + q * w, q, 3 * w) == p**2 + 3 * w**2
    assert substitute(p**2 + q * w, q, QQ(2)) == p**2 + 2 * w
