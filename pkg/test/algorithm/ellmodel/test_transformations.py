import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy import QQ

from quartseq.algorithm.ellmodel import (
    find_two_torsion_root,
    quartic_to_weierstrass,
    sc_jacobian_with_point,
    two_torsion_normalize,
)
from quartseq.algorithm.polyalg import BinaryQuartic, square_root
from quartseq.commons.errors import (
    LeadingCoefficientNotSquare,
    NoRationalPoint,
    NoRationalTwoTorsion,
)
from quartseq.data_container import INFINITY, Point, QuarticCurve, WeierstrassModel

coefficients = st.integers(min_value=-9, max_value=9)


@settings(max_examples=20, deadline=None)
@given(coefficients, coefficients, coefficients, coefficients, st.integers(1, 9))
def test_marked_quartic_maps(A, B, C, D, q) -> None:
    form = BinaryQuartic(A, B, C, D, q**2)
    assume(A != 0 and form.discriminant != 0)
    quartic = QuarticCurve(*form.coefficients, marked=Point(QQ(0), QQ(q)))
    model, pair = quartic_to_weierstrass(quartic)
    assert all(pair.verify(roundtrip=True).values())
    assert model.discriminant


def test_point_images_lie_on_model() -> None:
    quartic = QuarticCurve(1, 0, -3, 2, 4, marked=Point(QQ(0), QQ(2)))
    model, pair = quartic_to_weierstrass(quartic)
    point = Point(QQ(1), QQ(2))
    assert quartic.contains(point)
    image = pair.forward(point)
    assert model.contains(image)
    assert pair.backward(image) == point


def test_root_marked_quartic() -> None:
    quartic = QuarticCurve(1, 0, -5, 0, 4, marked=Point(QQ(1), QQ(0)))
    model, pair = quartic_to_weierstrass(quartic)
    assert all(pair.verify().values())


def test_quartic_marked_at_infinity() -> None:
    quartic = QuarticCurve(4, 0, 3, 0, 1)
    model, pair = quartic_to_weierstrass(quartic)
    assert pair.source.marked is INFINITY
    assert all(pair.verify().values())
    assert model.contains(pair.opposite)


def test_no_rational_point() -> None:
    with pytest.raises(NoRationalPoint):
        quartic_to_weierstrass(QuarticCurve(2, 0, 3, 0, 1))


def test_two_torsion_normalize() -> None:
    model = WeierstrassModel(0, -7, 6)  # roots 1, 2, -3
    normalized, shift = two_torsion_normalize(model, root=QQ(2))
    assert shift == 2
    assert not normalized.a6
    assert normalized.contains(Point(QQ(0), QQ(0)))


def test_two_torsion_normalize_searches_wrong_hint(caplog) -> None:
    model = WeierstrassModel(0, -7, 6)
    normalized, shift = two_torsion_normalize(model, root=QQ(5))
    assert not model.rhs(shift)
    assert "searching" in caplog.text


def test_find_two_torsion_root_missing() -> None:
    with pytest.raises(NoRationalTwoTorsion):
        find_two_torsion_root(WeierstrassModel(0, 0, 2))


def test_sc_jacobian_with_point() -> None:
    model, point, closed_form = sc_jacobian_with_point(BinaryQuartic(1, 0, 3, 0, 1))
    assert model == WeierstrassModel(0, -567, -4374)
    assert point == Point(QQ(-18), QQ(0))
    assert closed_form


def test_sc_jacobian_leading_not_square() -> None:
    with pytest.raises(LeadingCoefficientNotSquare):
        sc_jacobian_with_point(BinaryQuartic(2, 0, 3, 0, 1))


@pytest.mark.parametrize(
    "coefficients, point",
    [
        ((1, 2, -1, 3, 4), Point(QQ(1), QQ(3))),
        ((1, 2, 1, 3, 9), Point(QQ(1), QQ(4))),
        ((1, 2, 5, 3, 25), Point(QQ(1), QQ(-6))),
    ],
)
def test_marked_point_with_y_not_one_roundtrip(coefficients, point) -> None:
    q = square_root(QQ(coefficients[-1]))
    quartic = QuarticCurve(*coefficients, marked=Point(QQ(0), q))
    assert quartic.contains(point)
    model, pair = quartic_to_weierstrass(quartic)
    assert pair.verify(roundtrip=True)["roundtrip"]
    image = pair.forward(point)
    assert model.contains(image)
    assert pair.backward(image) == point


def test_root_marked_point_goes_to_infinity() -> None:
    quartic = QuarticCurve(1, 0, -5, 0, 4, marked=Point(QQ(1), QQ(0)))
    _, pair = quartic_to_weierstrass(quartic)
    assert pair.forward(Point(QQ(1), QQ(0))) is INFINITY
    assert pair.verify()["marked_to_infinity"]
    image = pair.forward(Point(QQ(2), QQ(0)))
    assert pair.target.contains(image)
