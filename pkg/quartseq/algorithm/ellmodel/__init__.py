from .group_law import TORSION_ORDERS, add, double, multiply, negate, torsion_order_or_infinite
from .heights import (
    INDEPENDENT,
    NOT_CERTIFIED,
    NUMERIC,
    IndependenceCertificate,
    canonical_height,
    height_pairing,
    independence_certificate,
    integral_model,
    naive_height,
)
from .isomorphisms import (
    EXACT_LAYER,
    J_LAYER,
    NO_LAYER,
    SCALING_LAYER,
    WeierstrassIsomorphism,
    isomorphism_scaling,
    j_invariant,
    match_layer,
    weierstrass_isomorphism,
)
from .rational_maps import RationalMap, pullback_residue, reduce_modulo_curve, roundtrip_residues
from .transformations import (
    RationalMapPair,
    find_two_torsion_root,
    quartic_to_weierstrass,
    sc_jacobian_with_point,
    two_torsion_normalize,
)


def is_on_curve(curve, point) -> bool:
    """Exact test of the curve equation for any of the curve models."""
    return curve.contains(point)
