from typing import Optional, Tuple, Union

from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement

from ...commons.errors import NotMonic, OddDegree
from ..exact import is_square
from .fields import RATIONAL_FUNCTIONS, Scalar, is_symbolic


def mestre_sqrt(P: PolyElement) -> Tuple[PolyElement, PolyElement]:
    """Split a monic polynomial of even degree 2n as P = Q^2 - R.

    Q is determined from the top coefficient down: the coefficients of x^(2n-k)
    in Q^2 and P agree for k = 0..n, which fixes the coefficient of x^(n-k) in Q.

    Parameters
    ----------
    P: PolyElement
        A univariate monic polynomial over a field of characteristic 0.

    Returns
    -------
    Tuple[PolyElement, PolyElement]
        Q monic of degree n and R = Q^2 - P of degree at most n - 1.

    Raises
    ------
    NotMonic
        If the leading coefficient of P is not 1.
    OddDegree
        If the degree of P is odd.
    """
    if not P or P.LC != 1:
        raise NotMonic(leading_coefficient=str(P.LC if P else 0))
    degree = P.degree()
    if degree % 2:
        raise OddDegree(degree=degree)
    n = degree // 2
    domain = P.ring.domain
    p = {monom[0]: coefficient for monom, coefficient in P.items()}
    q = {n: domain.one}
    for k in range(1, n + 1):
        target = 2 * n - k
        lower = n - k
        overlap = domain.zero
        for i in range(lower + 1, n + 1):
            j = target - i
            if lower < j <= n:
                overlap += q[i] * q[j]
        q[lower] = (p.get(target, domain.zero) - overlap) / 2
    Q = P.ring.from_dict({(i,): c for i, c in q.items()})
    return Q, Q**2 - P


def function_square_root(value: FracElement) -> Optional[FracElement]:
    """Square root in Q(t) with positive leading numerator coefficient, None if none exists.

    n/d is a square exactly when n*d is a rational square times the square of
    a monic polynomial.
    """
    if not value:
        return value
    product = value.numer * value.denom
    if product.degree() % 2:
        return None
    leading = product.LC
    leading_root = is_square(leading)
    if leading_root is None:
        return None
    root, remainder = mestre_sqrt(product.quo_ground(leading))
    if remainder:
        return None
    return RATIONAL_FUNCTIONS(root.mul_ground(leading_root)) / RATIONAL_FUNCTIONS(
        value.denom
    )


def square_root(value: Scalar) -> Optional[Scalar]:
    """Square root in Q or Q(t), None when the value is not a square."""
    if is_symbolic(value):
        return function_square_root(value)
    return is_square(value)


def perfect_square_root(F: Union[PolyElement, "BinaryQuartic"]) -> Optional[PolyElement]:
    """Exact square root of a univariate polynomial or of a binary quartic.

    Parameters
    ----------
    F: PolyElement or BinaryQuartic
        The polynomial to take the root of. A binary quartic is dehomogenised
        at w = 1 and its root homogenised back to a quadratic form in (p, w).

    Returns
    -------
    Optional[PolyElement]
        G with G^2 = F and a positive leading coefficient, or None when F is not
        a square over its coefficient field.
    """
    from .binary_quartic import BinaryQuartic

    if isinstance(F, BinaryQuartic):
        root = perfect_square_root(F.dehomogenize())
        if root is None:
            return None
        return F.homogenize(root, degree=2)
    if not F:
        return F
    if F.degree() % 2:
        return None
    leading_root = square_root(F.LC)
    if leading_root is None:
        return None
    Q, R = mestre_sqrt(F.quo_ground(F.LC))
    if R:
        return None
    return Q.mul_ground(leading_root)
