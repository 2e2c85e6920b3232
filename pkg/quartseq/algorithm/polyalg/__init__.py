from .binary_quartic import BinaryQuartic, quartic_invariants, scaled_discriminant
from .fields import (
    FUNCTION_DOMAIN,
    RATIONAL_FUNCTIONS,
    T,
    Scalar,
    coefficient,
    domain_of,
    evaluate_at,
    flat_ring,
    flatten,
    format_function,
    is_symbolic,
    parse_scalar,
    polynomial_ring,
    specialize,
    specialize_poly,
    to_scalar,
    unflatten,
)
from .interpolation import rational_root_interpolation, rational_roots
from .square_roots import mestre_sqrt, perfect_square_root, square_root


def substitute(F, var, value):
    """Substitute a polynomial or a scalar for one variable of a multivariate form.

    Parameters
    ----------
    F: PolyElement
        A form in the variables (p, q, w).
    var: PolyElement
        The generator to replace.
    value: PolyElement or Scalar
        The replacement, a polynomial of the same ring or a scalar.

    Returns
    -------
    PolyElement
        The form after exact substitution, in the same ring.
    """
    if not F.ring.is_element(value):
        value = F.ring.ground_new(to_scalar(value, F.ring.domain))
    return F.compose(var, value)
