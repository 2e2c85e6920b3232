import time
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement
from tqdm import tqdm

from ... import __version__
from ...algorithm.ellmodel import (
    add,
    j_invariant,
    quartic_to_weierstrass,
    sc_jacobian_with_point,
    torsion_order_or_infinite,
    weierstrass_isomorphism,
)
from ...algorithm.exact import Rational, is_square
from ...algorithm.polyalg import (
    T,
    BinaryQuartic,
    Scalar,
    domain_of,
    format_function,
    is_symbolic,
    parse_scalar,
    perfect_square_root,
    polynomial_ring,
    rational_root_interpolation,
    rational_roots,
    scaled_discriminant,
    specialize,
    substitute,
    to_scalar,
)
from ...commons import reference_values
from ...commons.config import load_settings
from ...commons.errors import (
    DegreeBoundExceeded,
    ExhaustedMultiples,
    IdentityCheckFailed,
    NoKillingSubstitution,
    NoRationalRoot,
    NotAPerfectSquare,
    ParameterError,
    PointIsTorsion,
    QuartseqError,
    SingularCurve,
    SingularSpecialization,
    SingularSystem,
)
from ...commons.logging_config import logger
from ...data_container.curve_schema import INFINITY, EvenQuartic, Point, QuarticCurve, WeierstrassModel
from ...data_container.record_schema import (
    MATCH,
    PARAM_MISMATCH,
    SKIPPED,
    CheckLedger,
    CurveRecord,
)
from ...data_container.sequence_schema import (
    FIXED_OFFSETS,
    INTERPOLATED_PATH,
    REFERENCE_PATH,
    WITNESS_OFFSETS,
    ParamPoint,
    QKill,
    SequenceSpec,
    SequenceWitness,
    SquareRelation,
)
from .pipeline_component_schema import PipelineComponent

if TYPE_CHECKING:
    from ..pipeline_schema import Pipeline

CONSTRUCTION_NAME = "fixed"
PARAMETRISATION = "chord-(p,q,w,0)"

# Offsets of the squares fixed by d, e, f; the others follow from the relations.
BASE_OFFSETS = WITNESS_OFFSETS[:3]
G_OFFSET, H_OFFSET, K_OFFSET = WITNESS_OFFSETS[3:]


def _fourth_powers(t: Scalar, offsets: Sequence[Rational]) -> List[Scalar]:
    domain = domain_of(t)
    return [(t + to_scalar(offset, domain)) ** 4 for offset in offsets]


def _solve_squares(t: Scalar, squares: Sequence[Scalar]) -> Tuple[Scalar, Scalar, Scalar]:
    """Cramer solution of a X_i^2 + b X_i + c = s_i, X_i = (t + i)^4 for i = -1, 0, 1."""
    domain = domain_of(t, *squares)
    t = to_scalar(t, domain)
    rows = [[X**2, X, domain.one] for X in _fourth_powers(t, BASE_OFFSETS)]
    right = [to_scalar(value, domain) for value in squares]
    determinant = DomainMatrix(rows, (3, 3), domain).det()
    if not determinant:
        raise SingularSystem(t=format_function(t))
    solution = []
    for column in range(3):
        replaced = [
            [right[i] if j == column else rows[i][j] for j in range(3)] for i in range(3)
        ]
        solution.append(DomainMatrix(replaced, (3, 3), domain).det() / determinant)
    return tuple(solution)


def solve_abc(t: Scalar, d: Scalar, e: Scalar, f: Scalar) -> Tuple[Scalar, Scalar, Scalar]:
    """Coefficients (a, b, c) of the even quartic through ((t - 1)^2, d), (t^2, e), ((t + 1)^2, f).

    Parameters
    ----------
    t : Scalar
        The sequence parameter, rational or symbolic.
    d, e, f : Scalar
        The y-values.

    Returns
    -------
    Tuple[Scalar, Scalar, Scalar]
        The solution of a x^4 + b x^2 + c = y^2 at the three points.

    Raises
    ------
    SingularSystem
        If two of (t - 1)^4, t^4, (t + 1)^4 coincide, that is t in {0, 1/2, -1/2}.
    """
    return _solve_squares(t, [d**2, e**2, f**2])


def square_relation(t: Scalar, target_offset: Rational) -> SquareRelation:
    """y^2 at (t + j)^2 in terms of d^2, e^2, f^2 for every curve y^2 = a x^4 + b x^2 + c.

    The coefficients are the values at (t + j)^4 of the Lagrange basis of the
    quadratic interpolation in x^2, so they sum to 1.

    Raises
    ------
    ParameterError
        If the target is one of the offsets -1, 0, 1 of d, e, f.
    SingularSystem
        As :func:`solve_abc`.
    """
    target_offset = QQ.convert(target_offset)
    if target_offset in BASE_OFFSETS:
        raise ParameterError(
            component_name="square_relation",
            param_name="target_offset",
            error_type=f"Offset {target_offset} already carries d, e or f",
        )
    domain = domain_of(t)
    (target,) = _fourth_powers(to_scalar(t, domain), [target_offset])
    units = [[domain.one if i == j else domain.zero for j in range(3)] for i in range(3)]
    coefficients = []
    for unit in units:
        a, b, c = _solve_squares(t, unit)
        coefficients.append(a * target**2 + b * target + c)
    return SquareRelation(target_offset, tuple(coefficients))


def _proportional_by_square(first: EvenQuartic, second: EvenQuartic) -> bool:
    """Whether second = s^2 first, the same curve up to y -> s y."""
    ratio = second.a / first.a
    if (second.b - ratio * first.b) or (second.c - ratio * first.c):
        return False
    return is_square(ratio) is not None


class FixedSequenceConstruction(PipelineComponent):
    """Curves y^2 = a x^4 + b x^2 + c through (t + i)^2, i = -2, ..., 3, for a fixed t.

    The y-values d, e, f at (t - 1)^2, t^2, (t + 1)^2 determine the curve; the
    ones at (t - 2)^2, (t + 2)^2, (t + 3)^2 are then g, h, k with

    * g^2 = lambda1 d^2 + lambda2 e^2 + lambda3 f^2, a quadric parametrised by
      (p : q : w) from its point (1, 1, 1, 1);
    * h^2 = nu1 d^2 + nu2 e^2 + nu3 f^2, a quartic in p; the line q = rho w
      makes it the square of a quadratic form h(p, w);
    * k^2 = kappa1 d^2 + kappa2 e^2 + kappa3 f^2, a quartic in (p, w) whose
      Jacobian has a point of infinite order for t = 3.

    Attributes
    ----------
    sequence: SequenceSpec
        The sequence, over Q(t) or at a rational t.
    _count: int
        Number of curves emitted by :meth:`run`.
    _walk_cap_factor: int
        The walk gives up after walk_cap_factor * count multiples.
    _verify_roundtrip: bool
        Whether birational maps are checked for backward o forward = identity.
    """

    def __init__(
        self,
        t: Optional[Scalar] = None,
        count: int = 1,
        walk_cap_factor: Optional[int] = None,
        verify_roundtrip: bool = True,
    ) -> None:
        """Initialise the construction.

        Parameters
        ----------
        t : Scalar, optional
            A rational value of t, by default None for the symbolic construction over Q(t).
        count : int, optional
            Number of curves emitted by :meth:`run`, by default 1.
        walk_cap_factor : int, optional
            Multiple cap factor of the walk, by default the configured one.
        verify_roundtrip : bool, optional
            Whether birational maps are checked for backward o forward = identity,
            by default True.

        Raises
        ------
        DegenerateSequence
            If two squares of the sequence coincide.
        """
        super().__init__()
        self.sequence = SequenceSpec(T if t is None else t)
        self._count = count
        self._walk_cap_factor = walk_cap_factor
        self._verify_roundtrip = verify_roundtrip
        self._check_parameters()

        self._relations: Dict[Rational, SquareRelation] = {}
        self._forms: Optional[Tuple[PolyElement, ...]] = None
        self._h_quartic: Optional[PolyElement] = None
        self._qkill: Optional[QKill] = None
        self._exhaustive = False
        self._rho: Optional[Scalar] = None
        self._h: Optional[PolyElement] = None
        self._k: Optional[BinaryQuartic] = None
        self._walks: Dict[Tuple[Rational, int], List[CurveRecord]] = {}
        self._timings: Dict[str, float] = {}

    def _check_parameters(self) -> None:
        if not isinstance(self._count, int) or self._count < 1:
            raise ParameterError(
                component_name=self.__class__.__name__,
                param_name="count",
                error_type="Count must be a positive integer",
            )
        if self._walk_cap_factor is None:
            self._walk_cap_factor = load_settings().walk_cap_factor
        elif self._walk_cap_factor < 1:
            raise ParameterError(
                component_name=self.__class__.__name__,
                param_name="walk_cap_factor",
                error_type="Cap factor must be positive",
            )
        if not self._verify_roundtrip:
            logger.warning(
                "Roundtrip identities of the birational maps will not be checked."
            )

    def check_resources(self) -> None:
        """This pipeline component does not need any access to any external resource."""
        logger.info("Fixed sequence construction has no external resource to check.")

    def get_performance_report(self) -> Dict[str, Any]:
        return {
            "construction": CONSTRUCTION_NAME,
            "t": format_function(self.sequence.t),
            "timings": dict(self._timings),
        }

    def _timed(self, stage: str, started: float) -> None:
        self._timings[stage] = time.perf_counter() - started
        logger.info("Stage %s done in %.2f s.", stage, self._timings[stage])

    def _reference(self, text: str) -> Scalar:
        value = parse_scalar(text)
        if self.sequence.is_symbolic:
            return value
        return specialize(value, self.sequence.t)

    def relation(self, target_offset: Rational) -> SquareRelation:
        """Cached :func:`square_relation` of the sequence."""
        target_offset = QQ.convert(target_offset)
        if target_offset not in self._relations:
            self._relations[target_offset] = square_relation(self.sequence.t, target_offset)
        return self._relations[target_offset]

    def quadric_parametrize(
        self, relation: Optional[SquareRelation] = None
    ) -> Tuple[PolyElement, PolyElement, PolyElement, PolyElement]:
        """(d, e, f, g) as quadratic forms in (p, q, w) on lambda1 d^2 + lambda2 e^2 + lambda3 f^2 = g^2.

        The line through (1, 1, 1, 1) with direction (p, q, w, 0) meets the
        quadric again at (N - 2 B p, N - 2 B q, N - 2 B w, N), with
        B = lambda1 p + lambda2 q + lambda3 w and N = lambda1 p^2 + lambda2 q^2 + lambda3 w^2.

        Parameters
        ----------
        relation : SquareRelation, optional
            The quadric, by default the relation of g.
        """
        if relation is None:
            if self._forms is not None:
                return self._forms
            relation = self.relation(G_OFFSET)
        forms = polynomial_ring("p,q,w", self.sequence.domain)
        p, q, w = forms.gens
        lambda1, lambda2, lambda3 = relation.coefficients
        B = p * lambda1 + q * lambda2 + w * lambda3
        N = p**2 * lambda1 + q**2 * lambda2 + w**2 * lambda3
        parametrisation = (N - 2 * B * p, N - 2 * B * q, N - 2 * B * w, N)
        if relation.target_offset == G_OFFSET:
            self._forms = parametrisation
        return parametrisation

    def _relation_form(self, target_offset: Rational) -> PolyElement:
        """nu1 d^2 + nu2 e^2 + nu3 f^2 for the relation of the target offset."""
        d, e, f, _ = self.quadric_parametrize()
        first, second, third = self.relation(target_offset).coefficients
        return d**2 * first + e**2 * second + f**2 * third

    def h_quartic(self) -> PolyElement:
        """h^2 as a form of degree 4 in (p, q, w), a quartic in p with coefficients in Q(t)[q, w]."""
        if self._h_quartic is None:
            started = time.perf_counter()
            self._h_quartic = self._relation_form(H_OFFSET)
            self._timed("h_quartic", started)
        return self._h_quartic

    def _killed_quartic(self, form: PolyElement, rho: Scalar) -> BinaryQuartic:
        p, q, w = form.ring.gens
        return BinaryQuartic.from_form(substitute(form, q, w * rho), p, w)

    def _kills(self, rho: Scalar) -> bool:
        return not self._killed_quartic(self.h_quartic(), rho).discriminant

    def _discriminant_roots(self) -> List[Scalar]:
        """Every rho in the base field with disc_p H(p, rho, 1) = 0."""
        H = self.h_quartic()
        q_ring = polynomial_ring("q", H.ring.domain)
        terms: List[Dict[Tuple[int], Scalar]] = [{} for _ in range(5)]
        for (i, j, _), value in H.items():
            terms[4 - i][(j,)] = value
        D = scaled_discriminant(*(q_ring.from_dict(part) for part in terms))
        if not D:
            raise NoKillingSubstitution(reason="every line q = rho w kills the discriminant")
        if not self.sequence.is_symbolic:
            return rational_roots(D)
        try:
            return rational_root_interpolation(D)
        except (NoRationalRoot, DegreeBoundExceeded) as error:
            logger.warning("Interpolation of the killing substitution failed: %s", error)
            return []

    def kill_discriminant(self, exhaustive: bool = False) -> QKill:
        """Substitution q = rho w making the p-discriminant of the h-quartic vanish.

        The tabulated rho is tried first. Otherwise, and always for a rational t,
        rho is searched among the roots of the discriminant seen as a polynomial
        in q / w; over Q(t) these are recovered by interpolation.

        Parameters
        ----------
        exhaustive : bool, optional
            Whether the roots are searched even when the tabulated rho works,
            by default False.

        Raises
        ------
        NoKillingSubstitution
            If no rho kills the discriminant.
        """
        if self._qkill is not None and (self._exhaustive or not exhaustive):
            return self._qkill
        started = time.perf_counter()
        candidates: List[Scalar] = []
        path = INTERPOLATED_PATH
        try:
            reference = self._reference(reference_values.RHO)
        except SingularSpecialization:
            reference = None
        if reference is not None and self._kills(reference):
            candidates.append(reference)
            path = REFERENCE_PATH
        else:
            logger.warning("Tabulated rho does not kill the discriminant, deriving it.")
        if exhaustive or not candidates or not self.sequence.is_symbolic:
            for root in self._discriminant_roots():
                if all(root - known for known in candidates):
                    candidates.append(root)
        if not candidates:
            raise NoKillingSubstitution(reason="the discriminant has no root in the base field")
        self._qkill = QKill(rho=candidates[0], path=path, candidates=candidates)
        self._exhaustive = (
            exhaustive or not self.sequence.is_symbolic or path == INTERPOLATED_PATH
        )
        self._timed("kill_discriminant", started)
        return self._qkill

    def extract_h(self) -> PolyElement:
        """Quadratic form h(p, w) whose square is the killed h-quartic.

        The candidates of :meth:`kill_discriminant` are tried in order; the first
        one giving a perfect square fixes rho.

        Raises
        ------
        NotAPerfectSquare
            If no candidate gives a perfect square; the message holds the
            square-free factorisation of the first killed quartic.
        """
        if self._h is not None:
            return self._h
        started = time.perf_counter()
        H = self.h_quartic()
        for exhaustive in (False, True):
            qkill = self.kill_discriminant(exhaustive=exhaustive)
            for rho in qkill.candidates:
                quartic = self._killed_quartic(H, rho)
                root = perfect_square_root(quartic)
                if root is not None and root**2 == quartic.as_form():
                    self._rho, self._h = rho, root
                    self._timed("extract_h", started)
                    return root
            if not self.sequence.is_symbolic or self._exhaustive:
                break
        first = self._killed_quartic(H, qkill.candidates[0]).dehomogenize()
        logger.error("Killed h-quartic is not a perfect square.")
        raise NotAPerfectSquare(factorisation=str(first.sqf_list()))

    @property
    def rho(self) -> Scalar:
        """The rho of the line q = rho w used downstream."""
        self.extract_h()
        return self._rho

    @property
    def rho_path(self) -> str:
        qkill = self.kill_discriminant()
        if qkill.path == REFERENCE_PATH and not (self.rho - qkill.candidates[0]):
            return REFERENCE_PATH
        return INTERPOLATED_PATH

    def k_quartic(self) -> BinaryQuartic:
        """k^2 = A p^4 + B p^3 w + C p^2 w^2 + D p w^3 + E w^4 after q = rho w.

        Raises
        ------
        IdentityCheckFailed
            If A is not lambda1^2 or the discriminant vanishes.
        """
        if self._k is not None:
            return self._k
        started = time.perf_counter()
        K = self._killed_quartic(self._relation_form(K_OFFSET), self.rho)
        lambda1 = self.relation(G_OFFSET).coefficients[0]
        if K.A - lambda1**2:
            raise IdentityCheckFailed(identity="k-quartic leading coefficient = lambda1^2")
        if not K.discriminant:
            raise IdentityCheckFailed(identity="k-quartic discriminant is non zero")
        self._k = K
        self._timed("k_quartic", started)
        return K

    def _witnesses_at(self, point: ParamPoint) -> Tuple[Scalar, ...]:
        """(d, e, f, g, h) at a point of the line q = rho w."""
        domain = self.sequence.domain
        values = [to_scalar(value, domain) for value in (point.p, point.q, point.w)]
        h_value = self.extract_h()(values[0], values[2])
        return tuple(form(*values) for form in self.quadric_parametrize()) + (h_value,)

    def five_term_curve(self, p: Scalar, w: Scalar) -> Tuple[EvenQuartic, List[Point]]:
        """Curve through (t + i)^2, i = -2, ..., 2, from the h parametrisation at (p : w).

        Returns
        -------
        Tuple[EvenQuartic, List[Point]]
            The curve and its five points ordered by offset.

        Raises
        ------
        IdentityCheckFailed
            If one of the points is off the curve.
        """
        d, e, f, g, h = self._witnesses_at(ParamPoint(p, w * self.rho, w))
        curve = EvenQuartic(*solve_abc(self.sequence.t, d, e, f))
        values = dict(zip(WITNESS_OFFSETS, (d, e, f, g, h)))
        points = [
            Point(self.sequence.x_value(offset), values[offset]) for offset in FIXED_OFFSETS[:5]
        ]
        if not all(curve.contains(point) for point in points):
            raise IdentityCheckFailed(identity="five term curve")
        return curve, points

    def jacobian_and_point(self) -> Tuple[WeierstrassModel, Point, bool]:
        """Jacobian y^2 = x^3 - 27 I x - 27 J of the k-quartic and its point."""
        return sc_jacobian_with_point(self.k_quartic())

    def _specialised(self, t0: Scalar) -> "FixedSequenceConstruction":
        t0 = QQ.convert(t0)
        if not self.sequence.is_symbolic and not (self.sequence.t - t0):
            return self
        return FixedSequenceConstruction(
            t0, walk_cap_factor=self._walk_cap_factor, verify_roundtrip=self._verify_roundtrip
        )

    def jacobian_walk(self, t0: Scalar, count: int) -> List[CurveRecord]:
        """Curves carrying the six squares from the multiples m P of the Jacobian point at t = t0.

        Each m P is sent to the k-quartic, giving (p : w) with w = 1 and q = rho,
        hence (d, e, f, g, h, k) and (a, b, c). Images at infinity, undefined maps,
        zero witnesses, singular curves and curves equal to an earlier one up to
        y -> s y are skipped.

        Parameters
        ----------
        t0 : Scalar
            A rational value of t.
        count : int
            Number of curves to produce.

        Returns
        -------
        List[CurveRecord]
            The verified records.

        Raises
        ------
        DegenerateSequence
            If t0 makes two squares coincide.
        PointIsTorsion
            If the Jacobian point is torsion.
        ExhaustedMultiples
            If fewer than count curves come out of walk_cap_factor * count multiples.
        """
        if is_symbolic(t0):
            raise ParameterError(
                component_name=self.__class__.__name__,
                param_name="t0",
                error_type="The walk needs a rational t",
            )
        construction = self._specialised(t0)
        key = (construction.sequence.t, count)
        if key not in self._walks:
            self._walks[key] = construction._walk(count)
        return self._walks[key]

    def _walk(self, count: int) -> List[CurveRecord]:
        started = time.perf_counter()
        t0 = self.sequence.t
        jacobian, point, closed_form = self.jacobian_and_point()
        order = torsion_order_or_infinite(jacobian, point)
        if order is not None:
            raise PointIsTorsion(t=format_function(t0), order=order)
        K = self.k_quartic()
        model, pair = quartic_to_weierstrass(
            QuarticCurve(*K.coefficients, marked=INFINITY), roundtrip=self._verify_roundtrip
        )
        isomorphism = weierstrass_isomorphism(jacobian, model)
        if isomorphism is None:
            raise IdentityCheckFailed(identity="Jacobian isomorphism", detail=str(model))

        cap = self._walk_cap_factor * count
        records: List[CurveRecord] = []
        curves: List[EvenQuartic] = []
        skipped = 0
        multiple = INFINITY
        for m in tqdm(range(1, cap + 1), desc=f"Jacobian walk at t = {t0}", leave=False):
            multiple = add(jacobian, multiple, point)
            image = pair.backward(isomorphism(multiple))
            if image is None or image.is_infinity:
                logger.warning("Multiple %d has no affine (p : w), skipped.", m)
                skipped += 1
                continue
            witness = self._witness_from(image)
            if witness is None:
                logger.warning("Multiple %d gives a zero witness, skipped.", m)
                skipped += 1
                continue
            curve = EvenQuartic(*solve_abc(t0, witness.d, witness.e, witness.f))
            if curve.is_degenerate or not curve.is_nonsingular:
                logger.warning("Multiple %d gives a singular curve, skipped.", m)
                skipped += 1
                continue
            if not witness.lies_on(curve):
                raise IdentityCheckFailed(
                    identity="six points on y^2 = a x^4 + b x^2 + c", detail=f"multiple {m}"
                )
            if any(_proportional_by_square(known, curve) for known in curves):
                logger.warning("Multiple %d repeats an earlier curve, skipped.", m)
                skipped += 1
                continue
            curves.append(curve)
            records.append(
                CurveRecord.build(
                    curve,
                    t0,
                    FIXED_OFFSETS,
                    witness.points(),
                    provenance={
                        "construction": CONSTRUCTION_NAME,
                        "multiple": m,
                        "parametrisation": PARAMETRISATION,
                        "rho_path": self.rho_path,
                        "closed_form_point": closed_form,
                        "skipped": skipped,
                        "version": __version__,
                    },
                )
            )
            if len(records) == count:
                break
        self._timed("jacobian_walk", started)
        if len(records) < count:
            raise ExhaustedMultiples(produced=len(records), requested=count, cap=cap)
        return records

    def _witness_from(self, image: Point) -> Optional[SequenceWitness]:
        """Witnesses at (p : w) = (x : 1) of a point (x, k) of the k-quartic."""
        d, e, f, g, h = self._witnesses_at(ParamPoint(image.x, self.rho, QQ.one))
        witness = SequenceWitness(self.sequence, d, e, f, g, h, image.y)
        if witness.has_zero():
            return None
        return witness

    def run(self, pipeline: "Pipeline") -> None:
        """Append the curves of the Jacobian walk to the pipeline.

        Parameters
        ----------
        pipeline : Pipeline
            The pipeline running.

        Raises
        ------
        ParameterError
            If the construction is symbolic.
        """
        pipeline.records.extend(self.jacobian_walk(self.sequence.t, self._count))

    def _reference_h(self) -> PolyElement:
        forms = self.extract_h().ring
        p, w = forms.gens
        coefficients = {
            key: self._reference(text) for key, text in reference_values.H_COEFFICIENTS.items()
        }
        form = p**2 * coefficients["pp"] + p * w * coefficients["pw"] + w**2 * coefficients["ww"]
        return form * self._reference(reference_values.H_PREFACTOR)

    def record_checks(self, ledger: CheckLedger) -> None:
        """Checks of the construction: relations, kill, h, k-quartic and the walk at t = 3.

        Parameters
        ----------
        ledger : CheckLedger
            The ledger the checks are appended to.
        """
        relation = self.relation(G_OFFSET)
        ledger.check("eq1.sum_to_one", lambda: not (relation.total - 1))
        for index, (derived, text) in enumerate(
            zip(relation.coefficients, reference_values.LAMBDAS), start=1
        ):
            ledger.compare(f"eq1.lambda{index}", derived, self._reference(text))

        def quadric_identity() -> bool:
            d, e, f, g = self.quadric_parametrize()
            return not (relation.evaluate(d, e, f) - g**2)

        ledger.check("quadric.identity", quadric_identity)
        ledger.check(
            "qkill.disc_zero",
            lambda: not self._killed_quartic(self.h_quartic(), self.rho).discriminant,
        )
        try:
            path = self.rho_path
        except QuartseqError:
            ledger.soft("qkill.reference_rho", SKIPPED)
        else:
            if path == REFERENCE_PATH:
                ledger.soft("qkill.reference_rho", MATCH)
            else:
                ledger.soft(
                    "qkill.reference_rho",
                    PARAM_MISMATCH,
                    derived=format_function(self.rho),
                    detail="tabulated rho is not the one used with this parametrisation",
                )

        ledger.check(
            "h.square_identity",
            lambda: self.extract_h() ** 2
            == self._killed_quartic(self.h_quartic(), self.rho).as_form(),
        )
        try:
            h = self.extract_h()
            reference = self._reference_h()
        except QuartseqError:
            ledger.soft("h.reference", SKIPPED)
        else:
            status = MATCH if h in (reference, -reference) else PARAM_MISMATCH
            ledger.soft("h.reference", status, derived=str(h))

        def leading_is_lambda1_squared() -> bool:
            return not (self.k_quartic().A - relation.coefficients[0] ** 2)

        ledger.check("kbar.A_is_lambda1_squared", leading_is_lambda1_squared)
        ledger.check("kbar.disc_nonzero", lambda: bool(self.k_quartic().discriminant))
        self._record_specialisation_checks(ledger)

    def _record_specialisation_checks(self, ledger: CheckLedger) -> None:
        t3 = parse_scalar(reference_values.SPECIALISATION_FIXED)
        specialised = self._specialised(t3)
        ledger.check(
            "t3.point_on_curve",
            lambda: specialised.jacobian_and_point()[0].contains(
                specialised.jacobian_and_point()[1]
            ),
        )
        ledger.check(
            "t3.infinite_order",
            lambda: torsion_order_or_infinite(*specialised.jacobian_and_point()[:2]) is None,
        )
        soft_names = ("Etilde.a4", "Etilde.a6", "Etilde.j", "Ptilde.x", "Ptilde.y")
        try:
            jacobian, point, _ = specialised.jacobian_and_point()
        except QuartseqError:
            for name in soft_names:
                ledger.soft(name, SKIPPED)
        else:
            a4 = parse_scalar(reference_values.JACOBIAN_AT_3["a4"])
            a6 = parse_scalar(reference_values.JACOBIAN_AT_3["a6"])
            ledger.compare("Etilde.a4", jacobian.a4, a4, mismatch_status=PARAM_MISMATCH)
            ledger.compare("Etilde.a6", jacobian.a6, a6, mismatch_status=PARAM_MISMATCH)
            try:
                reference_j = j_invariant(WeierstrassModel(0, a4, a6))
            except SingularCurve:
                ledger.soft("Etilde.j", SKIPPED, detail="tabulated curve is singular")
            else:
                ledger.compare(
                    "Etilde.j", j_invariant(jacobian), reference_j, mismatch_status=PARAM_MISMATCH
                )
            for coordinate in ("x", "y"):
                ledger.compare(
                    f"Ptilde.{coordinate}",
                    getattr(point, coordinate),
                    parse_scalar(reference_values.POINT_AT_3[coordinate]),
                    mismatch_status=PARAM_MISMATCH,
                )

        def walk_produces_records() -> bool:
            records = self.jacobian_walk(t3, 3)
            return len(records) == 3 and not any(record.failures() for record in records)

        ledger.check("walk.t3.records", walk_produces_records)
