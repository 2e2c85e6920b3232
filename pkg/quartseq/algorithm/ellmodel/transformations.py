"""From quartic models with a rational point to Weierstrass models, and back."""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ...commons.errors import (
    DegreeBoundExceeded,
    IdentityCheckFailed,
    LeadingCoefficientNotSquare,
    NoRationalPoint,
    NoRationalRoot,
    NoRationalTwoTorsion,
)
from ...commons.logging_config import logger
from ...data_container.curve_schema import INFINITY, Point, QuarticCurve, WeierstrassModel
from ..polyalg import (
    BinaryQuartic,
    Scalar,
    flatten,
    is_symbolic,
    polynomial_ring,
    rational_root_interpolation,
    rational_roots,
    square_root,
)
from .rational_maps import RationalMap, pullback_residue, roundtrip_residues


@dataclass(frozen=True)
class RationalMapPair:
    """Birational maps between a quartic model and a Weierstrass model.

    Attributes
    ----------
    source: QuarticCurve
        The quartic, with its marked point.
    target: WeierstrassModel
        The Weierstrass model.
    forward: RationalMap
        Quartic to Weierstrass.
    backward: RationalMap
        Weierstrass to quartic.
    chart_forward: RationalMap
        Map used to check the marked point image; differs from ``forward`` when
        the marked point is at infinity and is read in the chart (1/x, y/x^2).
    chart_marked: Point
        The marked point in the coordinates of ``chart_forward``.
    opposite: Point, optional
        Image of the point conjugate to the marked one under (x, y) -> (x, -y).
    """

    source: QuarticCurve
    target: WeierstrassModel
    forward: RationalMap
    backward: RationalMap
    chart_forward: RationalMap
    chart_marked: Point
    opposite: Optional[Point] = None

    def verify(self, roundtrip: bool = True) -> Dict[str, bool]:
        """Check the pullback, roundtrip and marked point identities exactly.

        Parameters
        ----------
        roundtrip: bool, optional
            Whether to check backward o forward = identity, by default True.

        Returns
        -------
        Dict[str, bool]
            One entry per identity.
        """
        source_equation = self.source.flat_equation()
        target_equation = self.target.flat_equation()
        results = {
            "pullback": not pullback_residue(self.forward, source_equation, target_equation),
            "marked_to_infinity": self.chart_forward(self.chart_marked) is INFINITY,
        }
        if roundtrip:
            x_residue, y_residue = roundtrip_residues(
                self.forward, self.backward, source_equation
            )
            results["roundtrip"] = not x_residue and not y_residue
        return results


def _shifted_coefficients(quartic: QuarticCurve, x0: Scalar) -> Tuple[Scalar, ...]:
    """Coefficients a, b, c, d, e of the quartic in u = x - x0."""
    A, B, C, D, E = quartic.coefficients
    return (
        A,
        4 * A * x0 + B,
        6 * A * x0**2 + 3 * B * x0 + C,
        4 * A * x0**3 + 3 * B * x0**2 + 2 * C * x0 + D,
        quartic.rhs(x0),
    )


def _non_root_point_maps(coefficients, x0: Scalar, q: Scalar, domain):
    """Maps for y^2 = a u^4 + b u^3 + c u^2 + d u + q^2, u = x - x0, marked (x0, q), q != 0."""
    a, b, c, d, _ = coefficients
    ring = polynomial_ring("x,y", domain)
    x, y = ring.gens
    u = x - x0
    forward = RationalMap.from_ratios(
        2 * q * (y + q) + d * u,
        u**2,
        (y + q) * (4 * q**2 + d * u) + 2 * q * d * u + 2 * q * c * u**2 + q * b * u**3,
        u**3,
    )
    model = WeierstrassModel(c, b * d - 4 * q**2 * a, q**2 * b**2 + a * d**2 - 4 * q**2 * a * c)
    # x and y now stand for the Weierstrass coordinates.
    u_num = 4 * q**2 * (x + c) - d**2
    u_den = 2 * q * y - d * x - 2 * q**2 * b
    backward = RationalMap.from_ratios(
        x0 * u_den + u_num,
        u_den,
        -2 * q**2 * u_den**2 + u_num * (u_num * x - d * u_den),
        2 * q * u_den**2,
    )
    long_a2 = c - d**2 / (4 * q**2)
    opposite = Point(-long_a2, (d / q * long_a2 - 2 * q * b) / 2)
    return model, forward, backward, opposite


def _root_point_maps(coefficients, x0: Scalar, domain):
    """Maps for a quartic marked at a root x0 of its right hand side."""
    e4, e3, e2, e1, _ = coefficients
    ring = polynomial_ring("x,y", domain)
    x, y = ring.gens
    u = x - x0
    forward = RationalMap.from_ratios(e1 * ring.one, u, e1 * y, u**2)
    model = WeierstrassModel(e2, e1 * e3, e1**2 * e4)
    backward = RationalMap.from_ratios(x0 * x + e1, x, e1 * y, x**2)
    return model, forward, backward


def _inversion(domain) -> RationalMap:
    """(x, y) -> (1/x, y/x^2), its own inverse."""
    ring = polynomial_ring("x,y", domain)
    x, y = ring.gens
    return RationalMap.from_ratios(ring.one, x, y, x**2)


def quartic_to_weierstrass(
    quartic: QuarticCurve, verify: bool = True, roundtrip: bool = True
) -> Tuple[WeierstrassModel, RationalMapPair]:
    """Weierstrass model of a quartic with a rational point, with verified maps.

    Three cases: a marked point with y != 0 (sent to infinity by the classical
    quartic to cubic substitution), a marked root of the quartic, and a marked
    point at infinity, handled in the chart (1/x, y/x^2).

    Parameters
    ----------
    quartic: QuarticCurve
        A nonsingular quartic. Without marked point its leading coefficient must
        be a square, and the point at infinity is used.
    verify: bool, optional
        Whether to check the identities of the maps, by default True.
    roundtrip: bool, optional
        Whether the check includes backward o forward = identity, by default True.

    Returns
    -------
    Tuple[WeierstrassModel, RationalMapPair]
        The model y^2 = x^3 + a2 x^2 + a4 x + a6 and the maps.

    Raises
    ------
    NoRationalPoint
        If no marked point is given and the leading coefficient is not a non zero square.
    IdentityCheckFailed
        If one of the identities does not hold.
    """
    domain = quartic.domain
    marked = quartic.marked
    if marked is None or marked.is_infinity:
        alpha = square_root(quartic.A)
        if alpha is None or not alpha:
            raise NoRationalPoint()
        quartic = quartic.with_marked(INFINITY)
        chart = QuarticCurve(*reversed(quartic.coefficients), marked=Point(domain.zero, alpha))
        model, chart_forward, chart_backward, opposite = _non_root_point_maps(
            _shifted_coefficients(chart, domain.zero), domain.zero, alpha, domain
        )
        inversion = _inversion(domain)
        pair = RationalMapPair(
            source=quartic,
            target=model,
            forward=chart_forward.compose(inversion),
            backward=inversion.compose(chart_backward),
            chart_forward=chart_forward,
            chart_marked=chart.marked,
            opposite=opposite,
        )
    elif not marked.y:
        model, forward, backward = _root_point_maps(
            _shifted_coefficients(quartic, marked.x), marked.x, domain
        )
        pair = RationalMapPair(quartic, model, forward, backward, forward, marked)
    else:
        model, forward, backward, opposite = _non_root_point_maps(
            _shifted_coefficients(quartic, marked.x), marked.x, marked.y, domain
        )
        pair = RationalMapPair(quartic, model, forward, backward, forward, marked, opposite)

    if verify:
        results = pair.verify(roundtrip=roundtrip)
        failed = [name for name, passed in results.items() if not passed]
        if failed:
            logger.error("Quartic to Weierstrass identities failed: %s", failed)
            raise IdentityCheckFailed(identity="quartic_to_weierstrass", detail=", ".join(failed))
        logger.info("Quartic to Weierstrass identities verified: %s", sorted(results))
    return model, pair


def find_two_torsion_root(model: WeierstrassModel) -> Scalar:
    """A root of x^3 + a2 x^2 + a4 x + a6 in the base field.

    Raises
    ------
    NoRationalTwoTorsion
        If the cubic has no root in Q, or no root found by interpolation in Q(t).
    """
    cubic = model.cubic()
    if not is_symbolic(model.a2):
        roots = rational_roots(cubic)
        if not roots:
            raise NoRationalTwoTorsion(model=str(model))
        return roots[0]
    flat_cubic, _ = flatten(cubic)
    t = flat_cubic.ring.gens[0]
    try:
        roots = rational_root_interpolation(flat_cubic, degree_bound=flat_cubic.degree(t))
    except (NoRationalRoot, DegreeBoundExceeded):
        raise NoRationalTwoTorsion(model=str(model))
    return roots[0]


def two_torsion_normalize(
    model: WeierstrassModel, root: Optional[Scalar] = None
) -> Tuple[WeierstrassModel, Scalar]:
    """Move a rational root of the cubic to 0, giving y^2 = x (x^2 + alpha x + beta).

    Parameters
    ----------
    model: WeierstrassModel
        A model whose cubic has a root in the base field.
    root: Scalar, optional
        A known root; it is checked, and searched for when missing or wrong.

    Returns
    -------
    Tuple[WeierstrassModel, Scalar]
        The shifted model (a6 = 0) and the shift r, with x_new = x_old - r.
    """
    if root is None or model.rhs(root):
        if root is not None:
            logger.warning("Two-torsion hint is not a root of the cubic, searching.")
        root = find_two_torsion_root(model)
    alpha = 3 * root + model.a2
    beta = 3 * root**2 + 2 * model.a2 * root + model.a4
    return WeierstrassModel(alpha, beta, model.domain.zero), root


def sc_jacobian_with_point(
    form: BinaryQuartic,
) -> Tuple[WeierstrassModel, Point, bool]:
    """Jacobian y^2 = x^3 - 27 I x - 27 J of a quartic with square leading coefficient, and a point.

    The point is (3 (3 B^2 - 8 A C) / (4 A), 27 (B^3 + 8 A^2 D - 4 A B C) / (8 A^(3/2)))
    with A^(1/2) the positive square root. When it fails the curve equation the
    image of the second point at infinity under the quartic to Weierstrass map is
    used instead.

    Returns
    -------
    Tuple[WeierstrassModel, Point, bool]
        The curve, the point, and whether the closed form point was used.

    Raises
    ------
    LeadingCoefficientNotSquare
        If A is not a square.
    """
    A, B, C, D, _ = form.coefficients
    root = square_root(A)
    if root is None or not root:
        raise LeadingCoefficientNotSquare(leading_coefficient=str(A))
    model = WeierstrassModel(form.domain.zero, -27 * form.I, -27 * form.J)
    point = Point(
        3 * (3 * B**2 - 8 * A * C) / (4 * A),
        27 * (B**3 + 8 * A**2 * D - 4 * A * B * C) / (8 * root**3),
    )
    if model.contains(point):
        return model, point, True
    logger.warning("Closed form point is not on the Jacobian, using the quartic map.")
    fallback_model, pair = quartic_to_weierstrass(
        QuarticCurve(*form.coefficients, marked=INFINITY), roundtrip=False
    )
    return fallback_model, pair.opposite, False
