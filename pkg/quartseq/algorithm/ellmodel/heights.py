"""Numeric canonical heights and independence certificates.

The estimates are not rigorous: every certificate carries the NUMERIC label.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ, factorint, igcd, ilcm

from ...commons.config import load_settings
from ...commons.errors import PrecisionNotReached, TorsionInput
from ...commons.logging_config import logger
from ...data_container.curve_schema import Point, WeierstrassModel
from ..exact import Rational, log_height
from .group_law import add, double, torsion_order_or_infinite

INDEPENDENT = "Independent"
NOT_CERTIFIED = "NotCertified"
NUMERIC = "NUMERIC"

TRIAL_DIVISION_LIMIT = 2**16


def _coprime_base(numbers: Iterable[int]) -> List[int]:
    """Pairwise coprime integers > 1 whose products give back every number."""
    work = []
    for number in numbers:
        work.extend(factorint(number, limit=TRIAL_DIVISION_LIMIT))
    base: List[int] = []
    while work:
        number = work.pop()
        for index, known in enumerate(base):
            common = igcd(number, known)
            if common > 1:
                base.pop(index)
                work.extend(n for n in (common, known // common, number // common) if n > 1)
                break
        else:
            if number > 1:
                base.append(number)
    return base


def _valuation(base: int, number: int) -> int:
    exponent = 0
    while number and not number % base:
        number //= base
        exponent += 1
    return exponent


def integral_model(model: WeierstrassModel) -> Tuple[WeierstrassModel, Rational]:
    """An isomorphic model with small integer coefficients.

    The scaling u (x' = u^2 x, y' = u^3 y) clears the denominators with the
    smallest exponents, then divides out every d with d^2 | a2, d^4 | a4 and
    d^6 | a6.

    Returns
    -------
    Tuple[WeierstrassModel, Rational]
        The scaled model and u, a positive rational.
    """
    weighted = [
        (QQ.convert(coefficient), weight)
        for coefficient, weight in ((model.a2, 2), (model.a4, 4), (model.a6, 6))
        if coefficient
    ]
    numbers = [int(abs(value.numerator)) for value, _ in weighted]
    numbers += [int(value.denominator) for value, _ in weighted]
    u = QQ(1)
    for base in _coprime_base(numbers):
        exponent = max(
            -((_valuation(base, int(value.numerator)) - _valuation(base, int(value.denominator)))
              // weight)
            for value, weight in weighted
        )
        u *= QQ(base) ** exponent
    scaled = WeierstrassModel(model.a2 * u**2, model.a4 * u**4, model.a6 * u**6)
    leftover = 1
    for coefficient in (scaled.a2, scaled.a4, scaled.a6):
        leftover = ilcm(leftover, int(QQ.convert(coefficient).denominator))
    if leftover > 1:
        # Composite base elements can leave a denominator behind.
        u *= leftover
        scaled = WeierstrassModel(model.a2 * u**2, model.a4 * u**4, model.a6 * u**6)
    logger.debug("Integral model %s, scaling %s.", scaled, u)
    return scaled, u


def naive_height(point: Point) -> float:
    """log max(|num|, den) of the x-coordinate; 0 at infinity and at x = 0."""
    if point.is_infinity or not point.x:
        return 0.0
    return log_height(point.x)


def canonical_height(
    model: WeierstrassModel,
    point: Point,
    tolerance: Optional[float] = None,
    max_doublings: Optional[int] = None,
) -> float:
    """Estimate lim h(2^k P) / 4^k on an integral model.

    Parameters
    ----------
    model: WeierstrassModel
        A curve over Q.
    point: Point
        A point of the curve.
    tolerance: float, optional
        Stop when two successive estimates differ by less, by default configured.
    max_doublings: int, optional
        Maximum k, by default configured.

    Returns
    -------
    float
        The estimate, 0 for torsion points.

    Raises
    ------
    PrecisionNotReached
        If the estimates do not stabilise within max_doublings doublings.
    """
    settings = load_settings()
    tolerance = tolerance if tolerance is not None else settings.height_tolerance
    max_doublings = max_doublings if max_doublings is not None else settings.height_max_doublings
    scaled, u = integral_model(model)
    if point.is_infinity:
        return 0.0
    current = Point(point.x * u**2, point.y * u**3)
    estimate = naive_height(current)
    for k in range(1, max_doublings + 1):
        current = double(scaled, current)
        if current.is_infinity:
            return 0.0
        previous, estimate = estimate, naive_height(current) / 4**k
        if abs(estimate - previous) < tolerance:
            return estimate
    raise PrecisionNotReached(doublings=max_doublings, tolerance=tolerance)


def height_pairing(model: WeierstrassModel, first: Point, second: Point) -> float:
    """<P, Q> = (h(P + Q) - h(P) - h(Q)) / 2."""
    sum_height = canonical_height(model, add(model, first, second))
    return (sum_height - canonical_height(model, first) - canonical_height(model, second)) / 2


@dataclass
class IndependenceCertificate:
    """Numeric evidence of linear independence of points of a curve over Q.

    Attributes
    ----------
    determinant: float
        Determinant of the height pairing matrix.
    verdict: str
        INDEPENDENT when the determinant exceeds the threshold, NOT_CERTIFIED otherwise.
    heights: List[float]
        Canonical height estimates of the points.
    gram: List[List[float]]
        The pairing matrix.
    label: str
        Always NUMERIC.
    """

    determinant: float
    verdict: str
    heights: List[float] = field(default_factory=list)
    gram: List[List[float]] = field(default_factory=list)
    label: str = NUMERIC


def independence_certificate(
    model: WeierstrassModel,
    points: Sequence[Point],
    threshold: Optional[float] = None,
) -> IndependenceCertificate:
    """Gram determinant of the canonical height pairing.

    Raises
    ------
    TorsionInput
        If one of the points is torsion.
    PrecisionNotReached
        If a height estimate does not stabilise.
    """
    threshold = threshold if threshold is not None else load_settings().gram_threshold
    for index, point in enumerate(points):
        order = torsion_order_or_infinite(model, point)
        if order is not None:
            raise TorsionInput(index=index, order=order)
    heights = [canonical_height(model, point) for point in points]
    size = len(points)
    gram = np.zeros((size, size))
    for i in range(size):
        gram[i, i] = heights[i]
        for j in range(i + 1, size):
            pair_height = canonical_height(model, add(model, points[i], points[j]))
            gram[i, j] = gram[j, i] = (pair_height - heights[i] - heights[j]) / 2
    determinant = float(np.linalg.det(gram)) if size else 0.0
    verdict = INDEPENDENT if determinant > threshold else NOT_CERTIFIED
    logger.info("Height Gram determinant %.6g over %d points: %s.", determinant, size, verdict)
    return IndependenceCertificate(
        determinant=determinant, verdict=verdict, heights=heights, gram=gram.tolist()
    )
