import pytest
from sympy import QQ

from quartseq.algorithm.polyalg import T
from quartseq.commons.errors import NoRationalRoot, RecordParseError
from quartseq.data_container import CheckLedger, CurveRecord, LedgerEntry, Point
from quartseq.data_container.record_schema import (
    FAIL,
    MATCH,
    MISMATCH,
    PARAM_MISMATCH,
    PASS,
    SKIPPED,
)
from quartseq.data_container.sequence_schema import FIXED_OFFSETS


@pytest.fixture(scope="function")
def record_at_3(x_fourth_curve) -> CurveRecord:
    points = [Point((3 + i) ** 2, (3 + i) ** 4) for i in FIXED_OFFSETS]
    return CurveRecord.build(
        x_fourth_curve, QQ(3), FIXED_OFFSETS, points, provenance={"construction": "fixed"}
    )


def test_build(record_at_3) -> None:
    assert record_at_3.key == ("1", "0", "0")
    assert record_at_3.t == "3"
    assert record_at_3.offsets == ["-2", "-1", "0", "1", "2", "3"]
    assert record_at_3.points[0] == ("1", "1")
    assert record_at_3.provenance["construction"] == "fixed"


def test_valid_record(record_at_3) -> None:
    assert record_at_3.failures() == []


def test_point_off_the_curve(record_at_3) -> None:
    record_at_3.points[2] = ("9", "80")
    failures = record_at_3.failures()
    assert len(failures) == 1
    assert "point 2" in failures[0]


def test_wrong_sequence(record_at_3) -> None:
    record_at_3.t = "4"
    assert record_at_3.failures() == ["x-values are not the consecutive squares (t + i)^2"]


def test_missing_point(record_at_3) -> None:
    record_at_3.points.pop()
    assert record_at_3.failures() == ["5 points for 6 offsets"]


def test_unknown_model(record_at_3) -> None:
    record_at_3.model = "weierstrass"
    with pytest.raises(RecordParseError):
        record_at_3.failures()


def test_symbolic_record(x_fourth_curve) -> None:
    points = [Point((T + int(i)) ** 2, (T + int(i)) ** 4) for i in FIXED_OFFSETS]
    record = CurveRecord.build(x_fourth_curve, T, FIXED_OFFSETS, points)
    assert record.t == "(t)"
    assert record.failures() == []


def test_dict_form(record_at_3) -> None:
    data = record_at_3.to_dict()
    assert data["model"] == "even_quartic"
    assert data["points"][0] == ["1", "1"]
    assert CurveRecord.from_dict(data) == record_at_3


def test_dict_form_errors(record_at_3) -> None:
    data = record_at_3.to_dict()
    del data["a"]
    with pytest.raises(RecordParseError):
        CurveRecord.from_dict(data)


@pytest.mark.parametrize(
    "status,hard", [(MATCH, True), (PASS, False), ("OK", True), (FAIL, False)]
)
def test_ledger_entry_status(status, hard) -> None:
    with pytest.raises(ValueError):
        LedgerEntry("check", status, hard=hard)


def test_ledger() -> None:
    ledger = CheckLedger()
    ledger.hard("identity", True)
    ledger.soft("tabulated", MISMATCH, derived="3/4")
    ledger.soft("skipped", SKIPPED, detail="no reference")
    assert len(ledger) == 3
    assert ledger.passed
    assert ledger["tabulated"].derived == "3/4"
    with pytest.raises(KeyError):
        ledger["missing"]
    ledger.hard("broken", False)
    assert not ledger.passed
    assert [entry.name for entry in ledger.hard_failures] == ["broken"]


def test_ledger_check_catches_library_errors() -> None:
    def failing() -> bool:
        raise NoRationalRoot("no specialisation agrees")

    ledger = CheckLedger()
    entry = ledger.check("roots", failing)
    assert entry.status == FAIL
    assert entry.detail
    assert ledger.check("true", lambda: True).status == PASS


def test_ledger_compare() -> None:
    ledger = CheckLedger()
    assert ledger.compare("same", T / 2, T / 2).status == MATCH
    assert ledger.compare("same", T / 2, T / 2).derived is None
    entry = ledger.compare("scalar", QQ(1, 3), QQ(1, 2), mismatch_status=PARAM_MISMATCH)
    assert entry.status == PARAM_MISMATCH
    assert entry.derived == "1/3"
    assert ledger.compare("mixed", QQ(2), 2 + 0 * T).status == MATCH


def test_ledger_to_dict() -> None:
    ledger = CheckLedger()
    ledger.hard("identity", True)
    ledger.soft("tabulated", MATCH, derived="ignored")
    assert ledger.to_dict() == {
        "entries": [
            {"name": "identity", "status": PASS, "hard": True},
            {"name": "tabulated", "status": MATCH, "hard": False},
        ],
        "passed": True,
    }
