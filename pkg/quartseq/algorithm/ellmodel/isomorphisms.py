from dataclasses import dataclass
from typing import Optional, Tuple

from sympy import QQ, integer_nthroot

from ...commons.errors import SingularCurve
from ...data_container.curve_schema import Point, WeierstrassModel
from ..polyalg import Scalar, is_symbolic, square_root


def j_invariant(model: WeierstrassModel) -> Scalar:
    """j = c4^3 / discriminant.

    Raises
    ------
    SingularCurve
        If the discriminant vanishes.
    """
    discriminant = model.discriminant
    if not discriminant:
        raise SingularCurve(model=str(model))
    return model.c4**3 / discriminant


def isomorphism_scaling(first: WeierstrassModel, second: WeierstrassModel) -> Optional[Scalar]:
    """Scaling s = u^2 with alpha2 = s alpha1 and beta2 = s^2 beta1, for models with a6 = 0.

    Returns
    -------
    Optional[Scalar]
        s when it exists and is a square in the base field, None otherwise.
    """
    alpha1, beta1 = first.a2, first.a4
    alpha2, beta2 = second.a2, second.a4
    if alpha1:
        candidates = [alpha2 / alpha1]
    elif alpha2:
        return None
    else:
        root = square_root(beta2 / beta1)
        if root is None:
            return None
        candidates = [root, -root]
    for s in candidates:
        if not (beta2 - s**2 * beta1) and square_root(s) is not None:
            return s
    return None


def _short_form(model: WeierstrassModel) -> Tuple[Scalar, Scalar]:
    """(A, B) of y^2 = X^3 + A X + B with X = x + a2 / 3."""
    a2, a4, a6 = model.a2, model.a4, model.a6
    return a4 - a2**2 / 3, a6 - a2 * a4 / 3 + 2 * a2**3 / 27


def _rational_cube_root(value) -> Optional[Scalar]:
    if is_symbolic(value):
        return None
    value = QQ.convert(value)
    sign = -1 if value < 0 else 1
    numerator, exact_numerator = integer_nthroot(abs(int(value.numerator)), 3)
    denominator, exact_denominator = integer_nthroot(int(value.denominator), 3)
    if not (exact_numerator and exact_denominator):
        return None
    return QQ(sign * int(numerator), int(denominator))


@dataclass(frozen=True)
class WeierstrassIsomorphism:
    """The isomorphism (x, y) -> (u^2 (x + a2/3) - a2'/3, u^3 y) between two models.

    Attributes
    ----------
    source, target: WeierstrassModel
        The two models.
    u: Scalar
        The scaling.
    """

    source: WeierstrassModel
    target: WeierstrassModel
    u: Scalar

    def __call__(self, point: Point) -> Point:
        if point.is_infinity:
            return point
        u = self.u
        x = u**2 * (point.x + self.source.a2 / 3) - self.target.a2 / 3
        return Point(x, u**3 * point.y)


def weierstrass_isomorphism(
    source: WeierstrassModel, target: WeierstrassModel
) -> Optional[WeierstrassIsomorphism]:
    """An isomorphism between two models over their base field, if any.

    Both models are depressed to y^2 = X^3 + A X + B; they are isomorphic when
    A' = u^4 A and B' = u^6 B for some u in the field.
    """
    A1, B1 = _short_form(source)
    A2, B2 = _short_form(target)
    if bool(A1) != bool(A2) or bool(B1) != bool(B2):
        return None
    candidates = []
    if A1 and B1:
        candidates.append((B2 * A1) / (A2 * B1))
    elif B1:
        candidates.append(_rational_cube_root(B2 / B1))
    else:
        fourth = square_root(A2 / A1)
        if fourth is not None:
            candidates.extend([fourth, -fourth])
    for u_squared in candidates:
        if u_squared is None:
            continue
        u = square_root(u_squared)
        if u is None:
            continue
        if not (A2 - u**4 * A1) and not (B2 - u**6 * B1):
            return WeierstrassIsomorphism(source, target, u)
    return None


EXACT_LAYER = "exact"
SCALING_LAYER = "scaling"
J_LAYER = "j-only"
NO_LAYER = "none"


def match_layer(derived: WeierstrassModel, reference: WeierstrassModel) -> str:
    """Strongest agreement between two models: exact, scaling, j-only or none."""
    if not (derived.a2 - reference.a2) and not (derived.a4 - reference.a4) and not (
        derived.a6 - reference.a6
    ):
        return EXACT_LAYER
    if not derived.a6 and not reference.a6 and isomorphism_scaling(derived, reference) is not None:
        return SCALING_LAYER
    if not (j_invariant(derived) - j_invariant(reference)):
        return J_LAYER
    return NO_LAYER
