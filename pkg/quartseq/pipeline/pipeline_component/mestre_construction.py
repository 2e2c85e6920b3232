import time
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Tuple

from sympy import QQ

from ... import __version__
from ...algorithm.ellmodel import (
    EXACT_LAYER,
    INDEPENDENT,
    NOT_CERTIFIED,
    NO_LAYER,
    IndependenceCertificate,
    RationalMapPair,
    independence_certificate,
    j_invariant,
    match_layer,
    quartic_to_weierstrass,
    two_torsion_normalize,
)
from ...algorithm.polyalg import (
    T,
    Scalar,
    coefficient,
    evaluate_at,
    format_function,
    is_symbolic,
    mestre_sqrt,
    parse_scalar,
    polynomial_ring,
    specialize,
)
from ...commons import reference_values
from ...commons.errors import (
    IdentityCheckFailed,
    ParameterError,
    QuartseqError,
    SingularCurve,
    SingularSpecialization,
)
from ...commons.logging_config import logger
from ...data_container.curve_schema import EvenQuartic, Point, WeierstrassModel
from ...data_container.record_schema import (
    MATCH,
    MISMATCH,
    PARAM_MISMATCH,
    SKIPPED,
    CheckLedger,
    CurveRecord,
)
from ...data_container.sequence_schema import HALF_OFFSETS, HalfOffsetSequence, MestreDecomposition
from .pipeline_component_schema import PipelineComponent

if TYPE_CHECKING:
    from ..pipeline_schema import Pipeline

CONSTRUCTION_NAME = "mestre"


@dataclass
class TwoTorsionModel:
    """Weierstrass model y^2 = x (x^2 + alpha x + beta) of y^2 = R(x) and the six images.

    Attributes
    ----------
    model: WeierstrassModel
        The model with a6 = 0.
    points: List[Point]
        Images of the six sequence points.
    shift: Scalar
        The 2-torsion root moved to 0.
    pair: RationalMapPair
        Maps between the shifted quartic and the model before the shift.
    reference_layer: str
        Agreement with the tabulated (alpha, beta) model.
    closed_form_layer: str
        Agreement of y^2 = x (x^2 - 2 b x + b^2 - 4 a c) with the tabulated model.
    j_match: bool
        Whether the model and the tabulated one have the same j-invariant.
    closed_form_j_match: bool
        Whether the model and the closed form have the same j-invariant.
    """

    model: WeierstrassModel
    points: List[Point]
    shift: Scalar
    pair: RationalMapPair
    reference_layer: str
    closed_form_layer: str
    j_match: bool
    closed_form_j_match: bool


def layer_status(layer: str) -> str:
    """Ledger status of a match layer."""
    if layer == EXACT_LAYER:
        return MATCH
    if layer == NO_LAYER:
        return MISMATCH
    return PARAM_MISMATCH


def _is_even(poly) -> bool:
    return all(monom[0] % 2 == 0 for monom in poly.keys())


class MestreConstruction(PipelineComponent):
    """Curve y^2 = R(x) through the squares (t + i)^2, i = +-1/2, +-3/2, +-5/2.

    The degree 12 polynomial P(x) = prod (x^2 - (t + i)^4) is split as P = Q^2 - R;
    every root x of P gives the point (x, Q(x)) on y^2 = R(x).

    Attributes
    ----------
    sequence: HalfOffsetSequence
        The sequence, over Q(t) or at a rational t.
    certificate: IndependenceCertificate
        Height certificate of the last :meth:`run` when a certification value is set.
    _certify_at: Rational, optional
        Value of t where :meth:`run` certifies the independence of the six points.
    _verify_roundtrip: bool
        Whether birational maps are checked for backward o forward = identity.
    """

    def __init__(
        self,
        t: Optional[Scalar] = None,
        certify_at: Optional[Scalar] = None,
        verify_roundtrip: bool = True,
    ) -> None:
        """Initialise the construction.

        Parameters
        ----------
        t : Scalar, optional
            A rational value of t, by default None for the symbolic construction over Q(t).
        certify_at : Scalar, optional
            Value of t for the independence certificate of :meth:`run`, by default None.
        verify_roundtrip : bool, optional
            Whether birational maps are checked for backward o forward = identity,
            by default True.

        Raises
        ------
        DegenerateSequence
            If two squares of the sequence coincide.
        """
        super().__init__()
        self.sequence = HalfOffsetSequence(T if t is None else t)
        self._certify_at = certify_at
        self._verify_roundtrip = verify_roundtrip
        self._check_parameters()

        self.certificate: Optional[IndependenceCertificate] = None
        self._decomposition: Optional[MestreDecomposition] = None
        self._curve: Optional[Tuple[EvenQuartic, List[Point]]] = None
        self._two_torsion: Optional[TwoTorsionModel] = None
        self._timings: Dict[str, float] = {}

    def _check_parameters(self) -> None:
        if self._certify_at is not None:
            if is_symbolic(self._certify_at):
                raise ParameterError(
                    component_name=self.__class__.__name__,
                    param_name="certify_at",
                    error_type="Certification needs a rational value of t",
                )
            self._certify_at = QQ.convert(self._certify_at)
            HalfOffsetSequence(self._certify_at)
        if not self._verify_roundtrip:
            logger.warning(
                "Roundtrip identities of the birational maps will not be checked."
            )

    def check_resources(self) -> None:
        """This pipeline component does not need any access to any external resource."""
        logger.info("Mestre construction has no external resource to check.")

    def get_performance_report(self) -> Dict[str, Any]:
        return {
            "construction": CONSTRUCTION_NAME,
            "t": format_function(self.sequence.t),
            "timings": dict(self._timings),
        }

    def _timed(self, stage: str, started: float) -> None:
        self._timings[stage] = time.perf_counter() - started
        logger.info("Stage %s done in %.2f s.", stage, self._timings[stage])

    def build_P(self):
        """P(x) = prod_i (x^2 - (t + i)^4), even, monic of degree 12."""
        x = polynomial_ring("x", self.sequence.domain).gens[0]
        P = x.ring.one
        for offset in self.sequence.offsets:
            P *= x**2 - self.sequence.root(offset) ** 4
        return P

    def decompose(self) -> MestreDecomposition:
        """Split P as Q^2 - R.

        Raises
        ------
        IdentityCheckFailed
            If P = Q^2 - R fails, or R has degree above 4, or one of P, Q, R is not even.
        """
        if self._decomposition is not None:
            return self._decomposition
        started = time.perf_counter()
        P = self.build_P()
        Q, R = mestre_sqrt(P)
        decomposition = MestreDecomposition(P, Q, R)
        if not decomposition.holds():
            raise IdentityCheckFailed(identity="P = Q^2 - R")
        if R.degree() > 4 or not all(_is_even(poly) for poly in (P, Q, R)):
            raise IdentityCheckFailed(
                identity="P = Q^2 - R", detail="R has degree above 4 or a part is not even"
            )
        self._decomposition = decomposition
        self._timed("decompose", started)
        return decomposition

    def curve_and_points(self) -> Tuple[EvenQuartic, List[Point]]:
        """The curve y^2 = R(x) and its points ((t + i)^2, Q((t + i)^2)).

        Raises
        ------
        SingularSpecialization
            If y^2 = R(x) is singular for this t.
        IdentityCheckFailed
            If one of the points is not on the curve.
        """
        if self._curve is not None:
            return self._curve
        decomposition = self.decompose()
        R = decomposition.R
        curve = EvenQuartic(coefficient(R, 4), coefficient(R, 2), coefficient(R, 0))
        if not curve.is_nonsingular:
            raise SingularSpecialization(
                t=format_function(self.sequence.t), reason="y^2 = R(x) is singular"
            )
        points = [Point(x, evaluate_at(decomposition.Q, x)) for x in self.sequence.x_values()]
        off_curve = [index for index, point in enumerate(points) if not curve.contains(point)]
        if off_curve:
            raise IdentityCheckFailed(
                identity="points on y^2 = R(x)", detail=f"points {off_curve} are off the curve"
            )
        self._curve = curve, points
        return self._curve

    def curve_and_points_at(self, tau: Scalar) -> Tuple[EvenQuartic, List[Point]]:
        """Specialise the curve and points of the symbolic construction at t = tau.

        Raises
        ------
        SingularSpecialization
            If tau is a pole or the specialised curve is singular.
        """
        curve, points = self.curve_and_points()
        specialised = curve.specialize(tau)
        if not specialised.is_nonsingular:
            raise SingularSpecialization(
                t=format_function(QQ.convert(tau)), reason="y^2 = R(x) is singular"
            )
        return specialised, [point.specialize(tau) for point in points]

    def _reference(self, text: str) -> Scalar:
        value = parse_scalar(text)
        if self.sequence.is_symbolic:
            return value
        return specialize(value, self.sequence.t)

    def reference_model(self) -> WeierstrassModel:
        """The tabulated model T^2 = S (S^2 + alpha S + beta)."""
        alpha = self._reference(reference_values.ALPHA)
        beta = self._reference(reference_values.BETA)
        return WeierstrassModel(alpha, beta, 0 * alpha)

    def estar_model(self) -> TwoTorsionModel:
        """Weierstrass model with the 2-torsion point (0, 0) and the images of the six points.

        The quartic is marked at (-(t - 1/2)^2, Q((t - 1/2)^2)): R is even, so this
        is a point of the curve, and no sequence point goes to infinity. The image
        of its reflection under (x, y) -> (-x, -y) is a 2-torsion point whose
        x-coordinate is the root moved to 0.

        Raises
        ------
        IdentityCheckFailed
            If a map identity fails or an image is not an affine point of the model.
        """
        if self._two_torsion is not None:
            return self._two_torsion
        started = time.perf_counter()
        curve, points = self.curve_and_points()
        Q = self.decompose().Q
        half = self.sequence.x_value(QQ(-1, 2))
        marked = Point(-half, evaluate_at(Q, half))
        model, pair = quartic_to_weierstrass(
            curve.as_quartic(marked=marked), roundtrip=self._verify_roundtrip
        )
        reflected = pair.forward(Point(half, -marked.y))
        hint = None if reflected is None or reflected.is_infinity else reflected.x
        normalized, shift = two_torsion_normalize(model, root=hint)

        images = []
        for index, point in enumerate(points):
            image = pair.forward(point)
            if image is None or image.is_infinity:
                raise IdentityCheckFailed(
                    identity="two-torsion model", detail=f"point {index} has no affine image"
                )
            image = Point(image.x - shift, image.y)
            if not normalized.contains(image):
                raise IdentityCheckFailed(
                    identity="two-torsion model", detail=f"image of point {index} is off the model"
                )
            images.append(image)

        closed_form = curve.two_torsion_jacobian()
        try:
            reference = self.reference_model()
        except SingularCurve:
            logger.warning("Tabulated (alpha, beta) model is singular at t = %s.", self.sequence.t)
            reference_layer = closed_form_layer = NO_LAYER
            j_match = False
        else:
            reference_layer = match_layer(normalized, reference)
            closed_form_layer = match_layer(closed_form, reference)
            j_match = not (j_invariant(normalized) - j_invariant(reference))
        self._two_torsion = TwoTorsionModel(
            model=normalized,
            points=images,
            shift=shift,
            pair=pair,
            reference_layer=reference_layer,
            closed_form_layer=closed_form_layer,
            j_match=j_match,
            closed_form_j_match=not (j_invariant(normalized) - j_invariant(closed_form)),
        )
        logger.info(
            "Two-torsion model matches the tabulated one at layer %s, closed form at layer %s.",
            reference_layer,
            closed_form_layer,
        )
        self._timed("estar_model", started)
        return self._two_torsion

    def independence_at(self, t0: Scalar) -> IndependenceCertificate:
        """Numeric certificate of independence of the six images at t = t0.

        Returns
        -------
        IndependenceCertificate
            NotCertified, with a zero determinant, when two images coincide.

        Raises
        ------
        DegenerateSequence
            If t0 makes two squares coincide.
        TorsionInput
            If one of the six images is torsion.
        PrecisionNotReached
            If a height estimate does not stabilise.
        """
        started = time.perf_counter()
        specialised = MestreConstruction(t0, verify_roundtrip=self._verify_roundtrip)
        two_torsion = specialised.estar_model()
        points = two_torsion.points
        if len({(point.x, point.y) for point in points}) < len(points):
            logger.warning("The six images at t = %s are not pairwise distinct.", t0)
            self._timed("independence_at", started)
            return IndependenceCertificate(determinant=0.0, verdict=NOT_CERTIFIED)
        certificate = independence_certificate(two_torsion.model, points)
        self._timed("independence_at", started)
        return certificate

    def to_record(self) -> CurveRecord:
        curve, points = self.curve_and_points()
        return CurveRecord.build(
            curve,
            self.sequence.t,
            HALF_OFFSETS,
            points,
            provenance={
                "construction": CONSTRUCTION_NAME,
                "multiple": None,
                "parametrisation": "half-offsets",
                "version": __version__,
            },
        )

    def run(self, pipeline: "Pipeline") -> None:
        """Append the curve record of the construction to the pipeline.

        Parameters
        ----------
        pipeline : Pipeline
            The pipeline running.
        """
        record = self.to_record()
        if self._certify_at is not None:
            self.certificate = self.independence_at(self._certify_at)
            record.provenance["independence"] = {
                "t": format_function(self._certify_at),
                "determinant": f"{self.certificate.determinant:.6g}",
                "verdict": self.certificate.verdict,
                "label": self.certificate.label,
            }
        pipeline.records.append(record)

    def record_checks(self, ledger: CheckLedger) -> None:
        """Checks of the construction: identities, tabulated Q, R, alpha, beta and independence.

        Parameters
        ----------
        ledger : CheckLedger
            The ledger the checks are appended to.
        """
        ledger.check("mestre.identity", lambda: self.decompose().holds())
        try:
            decomposition = self.decompose()
        except QuartseqError:
            decomposition = None
        for name, poly_name, table in (
            ("Q", "Q", reference_values.Q_COEFFICIENTS),
            ("R", "R", reference_values.R_COEFFICIENTS),
        ):
            for degree, text in table.items():
                entry = f"{name}.x{degree}.coeff"
                if decomposition is None:
                    ledger.soft(entry, SKIPPED)
                    continue
                derived = coefficient(getattr(decomposition, poly_name), degree)
                ledger.compare(entry, derived, self._reference(text))

        ledger.check("mestre.points_on_curve", lambda: bool(self.curve_and_points()))
        ledger.check("mestre.estar.j_match", lambda: self.estar_model().j_match)
        try:
            two_torsion = self.estar_model()
        except QuartseqError:
            ledger.soft("estar.alpha_beta.layer", SKIPPED)
            ledger.soft("estar.closed_form.layer", SKIPPED)
        else:
            ledger.soft(
                "estar.alpha_beta.layer",
                layer_status(two_torsion.reference_layer),
                derived=(
                    f"({format_function(two_torsion.model.a2)}, "
                    f"{format_function(two_torsion.model.a4)})"
                ),
                detail=two_torsion.reference_layer,
            )
            ledger.soft(
                "estar.closed_form.layer",
                layer_status(two_torsion.closed_form_layer),
                detail=two_torsion.closed_form_layer,
            )

        certify_at = self._certify_at
        if certify_at is None:
            certify_at = parse_scalar(reference_values.SPECIALISATION_HALF_OFFSETS)
        ledger.check(
            "mestre.independence",
            lambda: self.independence_at(certify_at).verdict == INDEPENDENT,
        )
