from types import SimpleNamespace

import pytest
from sympy import QQ

from quartseq.algorithm.ellmodel import INDEPENDENT, NOT_CERTIFIED, NUMERIC
from quartseq.algorithm.polyalg import T, coefficient, parse_scalar
from quartseq.commons import reference_values
from quartseq.commons.errors import DegenerateSequence, ParameterError, SingularSpecialization
from quartseq.data_container import CheckLedger
from quartseq.data_container.record_schema import MATCH, PASS
from quartseq.pipeline.pipeline_component import MestreConstruction
from quartseq.pipeline.pipeline_schema import Pipeline


def test_P_is_even_monic_of_degree_12(mestre_symbolic) -> None:
    P = mestre_symbolic.build_P()
    assert P.degree() == 12
    assert coefficient(P, 12) == 1
    assert coefficient(P, 11) == 0
    assert coefficient(P, 10) == -(6 * T**4 + 105 * T**2 + QQ(707, 8))


def test_decomposition(mestre_symbolic) -> None:
    decomposition = mestre_symbolic.decompose()
    assert decomposition.holds()
    assert decomposition.Q.degree() == 6
    assert decomposition.R.degree() <= 4
    assert mestre_symbolic.decompose() is decomposition


def test_Q_x4_coefficient(mestre_symbolic) -> None:
    Q = mestre_symbolic.decompose().Q
    assert coefficient(Q, 4) == -(48 * T**4 + 840 * T**2 + 707) / 16
    assert coefficient(Q, 4) == parse_scalar(reference_values.Q_COEFFICIENTS[4])


def test_points_on_curve(mestre_at_3_4) -> None:
    curve, points = mestre_at_3_4.curve_and_points()
    assert curve.is_nonsingular
    assert len(points) == 6
    assert all(curve.contains(point) for point in points)
    assert points[0].x == QQ(49, 16)


def test_symbolic_and_rational_paths_agree(mestre_symbolic, mestre_at_3_4) -> None:
    assert mestre_symbolic.curve_and_points_at(QQ(3, 4)) == mestre_at_3_4.curve_and_points()


def test_singular_specialization(mestre_symbolic) -> None:
    with pytest.raises(SingularSpecialization):
        mestre_symbolic.curve_and_points_at(QQ(0))


@pytest.mark.parametrize("t", [QQ(0), QQ(1, 2), QQ(-1)])
def test_degenerate_sequence(t) -> None:
    with pytest.raises(DegenerateSequence):
        MestreConstruction(t)


def test_certification_parameter() -> None:
    with pytest.raises(ParameterError):
        MestreConstruction(QQ(3, 4), certify_at=T)
    with pytest.raises(DegenerateSequence):
        MestreConstruction(QQ(3, 4), certify_at=QQ(1, 2))


def test_record(mestre_at_3_4) -> None:
    record = mestre_at_3_4.to_record()
    assert record.t == "3/4"
    assert record.offsets == ["-5/2", "-3/2", "-1/2", "1/2", "3/2", "5/2"]
    assert record.provenance["construction"] == "mestre"
    assert record.failures() == []


def test_symbolic_record(mestre_symbolic) -> None:
    record = mestre_symbolic.to_record()
    assert record.t == "(t)"
    assert record.failures() == []


def test_run_appends_record() -> None:
    pipeline = Pipeline(pipeline_components=[MestreConstruction(QQ(3, 4))])
    pipeline.build()
    records = pipeline.run()
    assert len(records) == 1
    assert "independence" not in records[0].provenance


def test_performance_report(mestre_at_3_4) -> None:
    mestre_at_3_4.decompose()
    report = mestre_at_3_4.get_performance_report()
    assert report["construction"] == "mestre"
    assert report["t"] == "3/4"


@pytest.mark.slow
def test_two_torsion_model(mestre_at_3_4) -> None:
    two_torsion = mestre_at_3_4.estar_model()
    assert not two_torsion.model.a6
    assert len(two_torsion.points) == 6
    assert all(two_torsion.model.contains(point) for point in two_torsion.points)
    assert two_torsion.closed_form_j_match


@pytest.mark.slow
def test_independence_at_3_4(mestre_symbolic) -> None:
    certificate = mestre_symbolic.independence_at(QQ(3, 4))
    assert certificate.verdict == INDEPENDENT
    assert certificate.label == NUMERIC
    assert len(certificate.heights) == 6


@pytest.mark.slow
def test_record_checks(mestre_symbolic) -> None:
    ledger = CheckLedger()
    mestre_symbolic.record_checks(ledger)
    assert ledger["mestre.identity"].status == PASS
    assert ledger["Q.x4.coeff"].status == MATCH
    assert ledger["mestre.points_on_curve"].status == PASS


def test_coinciding_images_not_certified(monkeypatch, curve_17, curve_17_points) -> None:
    P, Q, _ = curve_17_points
    images = SimpleNamespace(model=curve_17, points=[P, Q, P])
    monkeypatch.setattr(MestreConstruction, "estar_model", lambda construction: images)
    certificate = MestreConstruction().independence_at(QQ(3, 4))
    assert certificate.verdict == NOT_CERTIFIED
    assert certificate.determinant == 0.0
