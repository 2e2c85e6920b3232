"""Rational maps between plane curve models and their exact verification.

A map (x, y) -> (X, Y) is stored as two ratios of polynomials in the flat ring
Q[t, x, y]: composition, pullback and roundtrip checks are then polynomial
arithmetic over Q, with curve equations L y^2 = G(x) used to reduce powers of y.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Optional, Tuple

from sympy import QQ
from sympy.polys.rings import PolyElement

from ...data_container.curve_schema import INFINITY, Point
from ..polyalg import FUNCTION_DOMAIN, flat_ring, flatten, unflatten

FLAT = flat_ring("x,y")
_, FLAT_X, FLAT_Y = FLAT.gens

Equation = Tuple[PolyElement, PolyElement]


def _flatten_ratio(numerator: PolyElement, denominator: PolyElement) -> Tuple[PolyElement, PolyElement]:
    flat_numerator, numerator_scale = flatten(numerator)
    flat_denominator, denominator_scale = flatten(denominator)
    return flat_numerator * denominator_scale, flat_denominator * numerator_scale


@dataclass(frozen=True)
class RationalMap:
    """A map (x, y) -> (x_num / x_den, y_num / y_den) with flat polynomial ratios.

    Attributes
    ----------
    x_num, x_den, y_num, y_den: PolyElement
        Polynomials of Q[t, x, y].
    symbolic: bool
        Whether points are evaluated over Q(t) rather than Q.
    """

    x_num: PolyElement
    x_den: PolyElement
    y_num: PolyElement
    y_den: PolyElement
    symbolic: bool = False

    @classmethod
    def from_ratios(cls, x_num, x_den, y_num, y_den) -> "RationalMap":
        """Build the map from four polynomials in x, y over Q or Q(t)."""
        symbolic = x_num.ring.domain != QQ
        flat_x = _flatten_ratio(x_num, x_den)
        flat_y = _flatten_ratio(y_num, y_den)
        return cls(*flat_x, *flat_y, symbolic=symbolic)

    @cached_property
    def _local(self) -> Tuple[PolyElement, ...]:
        domain = FUNCTION_DOMAIN if self.symbolic else QQ
        return tuple(
            unflatten(poly, domain)
            for poly in (self.x_num, self.x_den, self.y_num, self.y_den)
        )

    def __call__(self, point: Point) -> Optional[Point]:
        """Image of an affine point.

        Returns
        -------
        Optional[Point]
            The image, INFINITY when x has a pole, None when the map is
            undefined at the point (numerator and denominator vanish).
        """
        if point.is_infinity:
            raise ValueError("Rational maps are evaluated on affine points only.")
        x_num, x_den, y_num, y_den = (poly(point.x, point.y) for poly in self._local)
        # A pole of x decides the image, whatever y_num / y_den reads there.
        if not x_den:
            return INFINITY if x_num else None
        if not y_den:
            return INFINITY if y_num else None
        return Point(x_num / x_den, y_num / y_den)

    def compose(self, inner: "RationalMap") -> "RationalMap":
        """The map self o inner."""
        x_degree = max(self.x_num.degree(FLAT_X), self.x_den.degree(FLAT_X),
                       self.y_num.degree(FLAT_X), self.y_den.degree(FLAT_X), 0)
        y_degree = max(self.x_num.degree(FLAT_Y), self.x_den.degree(FLAT_Y),
                       self.y_num.degree(FLAT_Y), self.y_den.degree(FLAT_Y), 0)
        powers = _PowerCache(inner, x_degree, y_degree)
        return RationalMap(
            *(powers.substitute(poly) for poly in (self.x_num, self.x_den, self.y_num, self.y_den)),
            symbolic=self.symbolic or inner.symbolic,
        )


class _PowerCache:
    """Homogenised substitution x -> xn / xd, y -> yn / yd with cached powers."""

    def __init__(self, inner: RationalMap, x_degree: int, y_degree: int) -> None:
        self._x_degree = x_degree
        self._y_degree = y_degree
        self._factors = {
            "xn": inner.x_num, "xd": inner.x_den, "yn": inner.y_num, "yd": inner.y_den
        }
        self._powers: Dict[Tuple[str, int], PolyElement] = {}

    def _power(self, name: str, exponent: int) -> PolyElement:
        key = (name, exponent)
        if key not in self._powers:
            if exponent == 0:
                self._powers[key] = FLAT.one
            else:
                self._powers[key] = self._power(name, exponent - 1) * self._factors[name]
        return self._powers[key]

    def substitute(self, poly: PolyElement) -> PolyElement:
        buckets: Dict[Tuple[int, int], Dict[Tuple[int, int, int], object]] = {}
        for (a, i, j), coefficient in poly.items():
            buckets.setdefault((i, j), {})[(a, 0, 0)] = coefficient
        result = FLAT.zero
        for (i, j), t_terms in buckets.items():
            factor = (
                self._power("xn", i)
                * self._power("xd", self._x_degree - i)
                * self._power("yn", j)
                * self._power("yd", self._y_degree - j)
            )
            result += FLAT.from_dict(t_terms) * factor
        return result


def reduce_modulo_curve(H: PolyElement, equation: Equation) -> PolyElement:
    """Reduce H modulo L y^2 = G(x), scaling by the power of L needed to clear y.

    Returns
    -------
    PolyElement
        A polynomial of degree at most 1 in y, zero exactly when H vanishes on the curve.
    """
    L, G = equation
    top = H.degree(FLAT_Y)
    if top < 2:
        return H
    half = top // 2
    result = FLAT.zero
    for j in range(top + 1):
        part = H.coeff_wrt(FLAT_Y, j)
        if not part:
            continue
        result += part * FLAT_Y ** (j % 2) * G ** (j // 2) * L ** (half - j // 2)
    return result


def pullback_residue(rational_map: RationalMap, source: Equation, target: Equation) -> PolyElement:
    """Residue of the target equation pulled back along the map, reduced on the source."""
    L, G = target
    degree = G.degree(FLAT_X)
    x_num, x_den = rational_map.x_num, rational_map.x_den
    y_num, y_den = rational_map.y_num, rational_map.y_den
    right = FLAT.zero
    for i in range(degree + 1):
        coefficient = G.coeff_wrt(FLAT_X, i)
        if coefficient:
            right += coefficient * x_num**i * x_den ** (degree - i)
    H = L * y_num**2 * x_den**degree - y_den**2 * right
    return reduce_modulo_curve(H, source)


def roundtrip_residues(
    forward: RationalMap, backward: RationalMap, source: Equation
) -> Tuple[PolyElement, PolyElement]:
    """Residues of backward o forward against the identity, reduced on the source."""
    composed = backward.compose(forward)
    x_residue = composed.x_num - FLAT_X * composed.x_den
    y_residue = composed.y_num - FLAT_Y * composed.y_den
    return reduce_modulo_curve(x_residue, source), reduce_modulo_curve(y_residue, source)
