"""Scalar fields of the constructions: the rationals and the function field Q(t).

Symbolic values are elements of sympy's rational function field in ``t``. Heavy
identity checks move polynomials over Q(t) into a flat polynomial ring over Q in
``t`` and the other variables, where no gcd is computed between operations.
"""

from functools import lru_cache
from typing import Any, Optional, Sequence, Tuple, Union

from sympy import QQ, sympify
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement, PolyRing, ring

from ...commons.errors import RecordParseError, SingularSpecialization
from ..exact import Rational, format_rational, parse_rational

RATIONAL_FUNCTIONS, T = field("t", QQ)
FUNCTION_DOMAIN = RATIONAL_FUNCTIONS.to_domain()

Scalar = Union[Rational, FracElement]


def is_symbolic(value: Any) -> bool:
    """True when the value lives in Q(t)."""
    return isinstance(value, FracElement)


def domain_of(*values: Any):
    """The smallest field among Q and Q(t) holding all the values."""
    return FUNCTION_DOMAIN if any(is_symbolic(value) for value in values) else QQ


def to_scalar(value: Any, domain) -> Scalar:
    """Convert a rational, an integer or a Q(t) element into the given domain."""
    if domain == QQ:
        return QQ.convert(value)
    if is_symbolic(value):
        return value
    return RATIONAL_FUNCTIONS(QQ.convert(value))


@lru_cache(maxsize=None)
def polynomial_ring(symbols: str, domain) -> PolyRing:
    """Cached sparse polynomial ring over Q or Q(t)."""
    return ring(symbols, domain)[0]


@lru_cache(maxsize=None)
def flat_ring(symbols: str) -> PolyRing:
    """Polynomial ring over Q in t followed by the given comma separated symbols."""
    return ring("t," + symbols, QQ)[0]


def specialize(value: Scalar, tau: Rational) -> Rational:
    """Substitute t = tau in a scalar.

    Parameters
    ----------
    value: Scalar
        A rational number or a rational function of t.
    tau: Rational
        The specialisation value.

    Returns
    -------
    Rational
        The specialised value.

    Raises
    ------
    SingularSpecialization
        If tau is a pole of the value.
    """
    if not is_symbolic(value):
        return QQ.convert(value)
    denominator = value.denom(tau)
    if not denominator:
        raise SingularSpecialization(
            t=format_rational(tau), reason=f"pole of {format_function(value)}"
        )
    return QQ.convert(value.numer(tau)) / QQ.convert(denominator)


def specialize_poly(poly: PolyElement, tau: Rational) -> PolyElement:
    """Specialise every coefficient of a polynomial over Q(t) at t = tau."""
    if poly.ring.domain == QQ:
        return poly
    target = polynomial_ring(",".join(map(str, poly.ring.symbols)), QQ)
    return target.from_dict(
        {monom: specialize(coefficient, tau) for monom, coefficient in poly.items()}
    )


def lift_poly(poly: PolyElement, domain) -> PolyElement:
    """Move a polynomial into the ring with the same symbols over another field."""
    if poly.ring.domain == domain:
        return poly
    target = polynomial_ring(",".join(map(str, poly.ring.symbols)), domain)
    return target.from_dict(
        {monom: to_scalar(coefficient, domain) for monom, coefficient in poly.items()}
    )


def evaluate_at(poly: PolyElement, value: Scalar) -> Scalar:
    """Horner evaluation of a univariate polynomial at a scalar of its field or of Q."""
    domain = poly.ring.domain
    value = to_scalar(value, domain)
    result = domain.zero
    for degree in range(max(poly.degree(), 0), -1, -1):
        result = result * value + coefficient(poly, degree)
    return result


def coefficient(poly: PolyElement, degree: int) -> Scalar:
    """Coefficient of x^degree of a univariate polynomial."""
    return dict(poly.items()).get((degree,), poly.ring.domain.zero)


def monic_parts(value: FracElement) -> Tuple[PolyElement, PolyElement]:
    """Numerator and monic denominator of a rational function."""
    numerator, denominator = value.numer, value.denom
    leading = denominator.LC
    return numerator.quo_ground(leading), denominator.quo_ground(leading)


def format_function(value: Scalar) -> str:
    """Canonical text of a scalar: "num/den" for rationals, "(num)/(den)" for Q(t)."""
    if not is_symbolic(value):
        return format_rational(value)
    numerator, denominator = monic_parts(value)
    if denominator == 1:
        return f"({numerator})"
    return f"({numerator})/({denominator})"


def parse_scalar(text: str) -> Scalar:
    """Read a scalar written by :func:`format_function`.

    Raises
    ------
    RecordParseError
        If the text is neither a rational nor a rational function of t.
    """
    if "t" not in text:
        return parse_rational(text)
    try:
        return RATIONAL_FUNCTIONS.from_expr(sympify(text, locals={"t": T.as_expr()}))
    except (ValueError, TypeError, SyntaxError) as error:
        raise RecordParseError(location=repr(text), reason=str(error))


def flatten(poly: PolyElement) -> Tuple[PolyElement, PolyElement]:
    """Clear the t-denominators of a polynomial over Q or Q(t).

    Parameters
    ----------
    poly: PolyElement
        A polynomial in some variables over Q or Q(t).

    Returns
    -------
    Tuple[PolyElement, PolyElement]
        ``(F, L)`` in the flat ring over Q in t and the same variables with
        ``poly = F / L`` and ``L`` a polynomial in t alone.
    """
    symbols = ",".join(map(str, poly.ring.symbols))
    target = flat_ring(symbols)
    if poly.ring.domain == QQ:
        return target.from_dict({(0,) + monom: c for monom, c in poly.items()}), target.one
    common = RATIONAL_FUNCTIONS.ring.one
    for coefficient in poly.values():
        common = common.lcm(coefficient.denom)
    terms = {}
    for monom, coefficient in poly.items():
        cleared = coefficient.numer * common.exquo(coefficient.denom)
        for (degree,), value in cleared.items():
            terms[(degree,) + monom] = value
    return target.from_dict(terms), _t_poly_to_flat(common, target)


def flatten_scalars(values: Sequence[Scalar], target: PolyRing) -> Tuple[list, PolyElement]:
    """Clear the common denominator of scalars into polynomials in t of a flat ring."""
    common = RATIONAL_FUNCTIONS.ring.one
    for value in values:
        if is_symbolic(value):
            common = common.lcm(value.denom)
    cleared = []
    for value in values:
        if is_symbolic(value):
            numerator = value.numer * common.exquo(value.denom)
            cleared.append(_t_poly_to_flat(numerator, target))
        else:
            cleared.append(_t_poly_to_flat(common, target).mul_ground(QQ.convert(value)))
    return cleared, _t_poly_to_flat(common, target)


def unflatten(poly: PolyElement, domain) -> PolyElement:
    """Inverse of :func:`flatten`: gather the powers of t into coefficients in the domain."""
    symbols = ",".join(map(str, poly.ring.symbols[1:]))
    target = polynomial_ring(symbols, domain)
    gathered = {}
    for monom, coefficient in poly.items():
        degree, rest = monom[0], monom[1:]
        gathered.setdefault(rest, {})[(degree,)] = coefficient
    terms = {}
    for rest, t_terms in gathered.items():
        t_poly = RATIONAL_FUNCTIONS.ring.from_dict(t_terms)
        if domain == QQ:
            if t_poly.degree() > 0:
                raise ValueError("polynomial depends on t")
            terms[rest] = t_poly.coeff(1)
        else:
            terms[rest] = RATIONAL_FUNCTIONS(t_poly)
    return target.from_dict(terms)


def _t_poly_to_flat(poly: PolyElement, target: PolyRing) -> PolyElement:
    padding = (0,) * (target.ngens - 1)
    return target.from_dict({(degree,) + padding: c for (degree,), c in poly.items()})
