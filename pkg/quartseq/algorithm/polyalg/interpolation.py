"""Roots in Q(t) of a polynomial with Q(t) coefficients.

The roots are recovered from rational specialisations: the rational roots of
every specialised polynomial are sorted into lanes, each lane is interpolated
by a rational function of bounded degree and every candidate is verified
symbolically before it is returned.
"""

import random
from collections import Counter
from typing import Dict, List, Optional

from sympy import QQ, Rational as SympyRational, Symbol, rational_interpolate
from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement

from ...commons.config import load_settings
from ...commons.errors import DegreeBoundExceeded, NoRationalRoot
from ...commons.logging_config import logger
from ..exact import Rational
from .fields import RATIONAL_FUNCTIONS, T, flatten

# Samples are drawn from windows further and further from 0 so that the
# ordering of the roots stabilises.
_SAMPLE_WINDOWS = (1, 101, 10001)


def rational_roots(poly: PolyElement) -> List[Rational]:
    """Sorted distinct rational roots of a univariate polynomial over Q."""
    roots = set()
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() == 1:
            roots.add(-factor.coeff(1) / factor.LC)
    return sorted(roots)


def evaluate_at_function(D: PolyElement, root: FracElement) -> PolyElement:
    """Numerator of D(t, root) for D in the flat ring Q[t, v], as a polynomial in t."""
    numerator, denominator = root.numer, root.denom
    degree = D.degree(D.ring.gens[1])
    value = numerator.ring.zero
    for (i, j), coefficient in D.items():
        value += (
            numerator**j * denominator ** (degree - j) * T.numer**i
        ).mul_ground(coefficient)
    return value


def rational_root_interpolation(
    D: PolyElement,
    degree_bound: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> List[FracElement]:
    """Find the roots in Q(t) of a polynomial D.

    Parameters
    ----------
    D: PolyElement
        Either a univariate polynomial over Q(t), or a polynomial in the flat
        ring Q[t, v] whose first generator is t.
    degree_bound: int, optional
        Bound on the numerator and denominator degrees of the roots, by default
        the configured interpolation degree.
    samples: int, optional
        Number of specialisations, by default the configured value (raised to
        at least 2 * degree_bound + 3).
    seed: int, optional
        Seed of the specialisation sampler, by default the configured seed.

    Returns
    -------
    List[FracElement]
        The verified roots, sorted by their value at the last sample.

    Raises
    ------
    NoRationalRoot
        If the specialised polynomials have no consistent rational roots.
    DegreeBoundExceeded
        If rational roots exist at every specialisation but none of the
        interpolated candidates is a root.
    """
    settings = load_settings()
    degree_bound = degree_bound if degree_bound is not None else settings.interpolation_degree
    samples = max(
        samples if samples is not None else settings.interpolation_samples,
        2 * degree_bound + 3,
    )
    seed = seed if seed is not None else settings.random_seed
    if D.ring.ngens == 1:
        D, _ = flatten(D)
    if not D:
        raise NoRationalRoot(reason="the zero polynomial has every root")
    t, v = D.ring.gens
    if D.degree(v) < 1:
        raise NoRationalRoot(reason="polynomial is constant in its variable")

    sampler = random.Random(seed)
    found_lanes = False
    for window in _SAMPLE_WINDOWS:
        roots_at = _specialised_roots(D, t, v, window, samples, sampler)
        if len(roots_at) < 2 * degree_bound + 2:
            continue
        counts = Counter(len(roots) for roots in roots_at.values())
        lane_count, _ = counts.most_common(1)[0]
        if lane_count == 0:
            continue
        found_lanes = True
        taus = [tau for tau, roots in roots_at.items() if len(roots) == lane_count]
        if len(taus) < 2 * degree_bound + 2:
            continue
        verified = []
        for lane in range(lane_count):
            candidate = _interpolate_lane(
                [(tau, roots_at[tau][lane]) for tau in taus], degree_bound
            )
            if candidate is not None and not evaluate_at_function(D, candidate):
                if not any(not (candidate - known) for known in verified):
                    verified.append(candidate)
        if verified:
            logger.info("Interpolated %d root(s) from window %d.", len(verified), window)
            return verified
        logger.warning(
            "No interpolated lane verified with %d samples from window %d.",
            len(taus),
            window,
        )
    if found_lanes:
        raise DegreeBoundExceeded(degree_bound=degree_bound)
    raise NoRationalRoot(reason="no rational roots at the sampled specialisations")


def _specialised_roots(
    D: PolyElement, t, v, window: int, samples: int, sampler: random.Random
) -> Dict[Rational, List[Rational]]:
    leading = D.coeff_wrt(v, D.degree(v))
    roots_at = {}
    candidates = sampler.sample(range(window, window + 40 * samples), samples)
    for value in sorted(candidates):
        tau = QQ(value)
        if not leading.evaluate(t, tau):
            continue
        specialised = D.evaluate(t, tau)
        roots_at[tau] = rational_roots(specialised)
    return roots_at


def _interpolate_lane(data, degree_bound: int) -> Optional[FracElement]:
    """Rational function of degrees (degree_bound, degree_bound) through the first points.

    The remaining points must agree with it, otherwise the lane is rejected.
    """
    size = 2 * degree_bound + 1
    head, tail = data[:size], data[size:]
    symbol = Symbol("t")
    expression = rational_interpolate(
        [(_to_sympy(tau), _to_sympy(value)) for tau, value in head],
        degree_bound,
        X=symbol,
    )
    candidate = RATIONAL_FUNCTIONS.from_expr(expression)
    for tau, value in tail:
        denominator = candidate.denom(tau)
        if not denominator or candidate.numer(tau) / denominator != value:
            return None
    return candidate


def _to_sympy(value: Rational) -> SympyRational:
    return SympyRational(int(value.numerator), int(value.denominator))
