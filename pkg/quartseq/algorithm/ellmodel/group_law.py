"""Chord and tangent law on y^2 = x^3 + a2 x^2 + a4 x + a6."""

from typing import Optional

from ...data_container.curve_schema import INFINITY, Point, WeierstrassModel
from ..polyalg import is_symbolic

# Possible orders of rational torsion points over Q (Mazur).
TORSION_ORDERS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)


def negate(W: WeierstrassModel, P: Point) -> Point:
    if P.is_infinity:
        return P
    return Point(P.x, -P.y)


def add(W: WeierstrassModel, P: Point, Q: Point) -> Point:
    """Sum of two points of W, Infinity being the identity."""
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if not (P.x - Q.x):
        if not (P.y + Q.y):
            return INFINITY
        return double(W, P)
    slope = (Q.y - P.y) / (Q.x - P.x)
    return _chord(W, P, Q.x, slope)


def double(W: WeierstrassModel, P: Point) -> Point:
    if P.is_infinity or not P.y:
        return INFINITY
    slope = (3 * P.x**2 + 2 * W.a2 * P.x + W.a4) / (2 * P.y)
    return _chord(W, P, P.x, slope)


def _chord(W: WeierstrassModel, P: Point, other_x, slope) -> Point:
    x = slope**2 - W.a2 - P.x - other_x
    y = slope * (P.x - x) - P.y
    return Point(x, y)


def multiply(W: WeierstrassModel, P: Point, n: int) -> Point:
    """n P by double and add; negative n uses -P."""
    if n < 0:
        return multiply(W, negate(W, P), -n)
    result = INFINITY
    addend = P
    while n:
        if n & 1:
            result = add(W, result, addend)
        n >>= 1
        if n:
            addend = double(W, addend)
    return result


def torsion_order_or_infinite(W: WeierstrassModel, P: Point) -> Optional[int]:
    """Order of a point of a curve over Q, or None when it has infinite order.

    Multiples are computed up to 12 P; by Mazur's bound a point whose order is
    not among TORSION_ORDERS has infinite order.

    Parameters
    ----------
    W: WeierstrassModel
        A curve over Q.
    P: Point
        A point of W.

    Returns
    -------
    Optional[int]
        The order of P, or None for a point of infinite order.
    """
    if is_symbolic(W.a2):
        raise ValueError("The torsion test needs a curve over Q.")
    multiple = P
    for n in range(1, TORSION_ORDERS[-1] + 1):
        if multiple.is_infinity and n in TORSION_ORDERS:
            return n
        multiple = add(W, multiple, P)
    return None
