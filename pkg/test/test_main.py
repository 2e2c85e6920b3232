import json
import os
import subprocess
import sys
from pathlib import Path

import pytest
from sympy import QQ

from quartseq.__main__ import main
from quartseq.commons.errors import SingularCurve
from quartseq.data_container import CurveRecord, Point
from quartseq.repository.serialiser import RecordJSONSerialiser


def run_cli(monkeypatch, *arguments) -> int:
    monkeypatch.setattr(sys, "argv", ["quartseq", *arguments])
    with pytest.raises(SystemExit) as exit_info:
        main()
    return exit_info.value.code


@pytest.fixture(scope="function")
def records_file(x_fourth_curve, test_data_path) -> str:
    offsets = [QQ(i) for i in range(-2, 4)]
    points = [Point((3 + i) ** 2, (3 + i) ** 4) for i in offsets]
    record = CurveRecord.build(x_fourth_curve, QQ(3), offsets, points)
    RecordJSONSerialiser().serialise([record], "records.json")
    return "records.json"


def test_verify(monkeypatch, capsys, records_file) -> None:
    assert run_cli(monkeypatch, "verify", records_file) == 0
    assert "record 0: PASS" in capsys.readouterr().out


def test_verify_failure(monkeypatch, capsys, records_file) -> None:
    with open(records_file, "r", encoding="utf8") as json_file:
        data = json.load(json_file)
    data["records"][0]["points"][0][1] = "2"
    with open(records_file, "w", encoding="utf8") as json_file:
        json.dump(data, json_file)
    assert run_cli(monkeypatch, "verify", records_file) == 1
    assert "record 0: FAIL" in capsys.readouterr().out


def test_verify_singular_curve(monkeypatch, capsys, records_file) -> None:
    with open(records_file, "r", encoding="utf8") as json_file:
        data = json.load(json_file)
    data["records"][0].update({"a": "0", "b": "0", "c": "0"})
    with open(records_file, "w", encoding="utf8") as json_file:
        json.dump(data, json_file)
    assert run_cli(monkeypatch, "verify", records_file) == 1
    assert "record 0: FAIL" in capsys.readouterr().out


def test_verify_model_error_fails_record(monkeypatch, capsys, records_file) -> None:
    def singular(record):
        raise SingularCurve(model="y^2 = x^3")

    monkeypatch.setattr(CurveRecord, "failures", singular)
    assert run_cli(monkeypatch, "verify", records_file) == 1
    out = capsys.readouterr().out
    assert "record 0: FAIL" in out
    assert "is singular" in out


def test_package_imports_in_fresh_interpreter() -> None:
    root = Path(__file__).resolve().parents[1]
    completed = subprocess.run(
        [sys.executable, "-c", "import quartseq.__main__"],
        capture_output=True,
        text=True,
        cwd=root,
        env={**os.environ, "PYTHONPATH": str(root)},
    )
    assert completed.returncode == 0, completed.stderr


def test_verify_zero_denominator(monkeypatch, capsys, records_file) -> None:
    with open(records_file, "r", encoding="utf8") as json_file:
        data = json.load(json_file)
    data["records"][0]["c"] = "1/0"
    with open(records_file, "w", encoding="utf8") as json_file:
        json.dump(data, json_file)
    assert run_cli(monkeypatch, "verify", records_file) == 2
    assert "by zero" in capsys.readouterr().err


def test_mestre(monkeypatch, test_data_path) -> None:
    assert run_cli(monkeypatch, "mestre", "--t", "3/4", "--out", "mestre.json") == 0
    records = RecordJSONSerialiser().load("mestre.json")
    assert len(records) == 1
    assert records[0].failures() == []


@pytest.mark.parametrize(
    "arguments",
    [
        ("mestre", "--t", "1/2", "--out", "out.json"),
        ("mestre", "--t", "1/0", "--out", "out.json"),
        ("mestre", "--t", "three", "--out", "out.json"),
        ("fixed", "--t", "0", "--out", "out.json"),
        ("fixed", "--t", "3", "--count", "0", "--out", "out.json"),
    ],
)
def test_invalid_input(monkeypatch, capsys, test_data_path, arguments) -> None:
    assert run_cli(monkeypatch, *arguments) == 2
    assert f"quartseq {arguments[0]}:" in capsys.readouterr().err


def test_missing_arguments(monkeypatch) -> None:
    assert run_cli(monkeypatch, "fixed", "--t", "3") == 2


@pytest.mark.slow
def test_fixed(monkeypatch, test_data_path) -> None:
    assert run_cli(monkeypatch, "fixed", "--t", "3", "--count", "2", "--out", "fixed.json") == 0
    records = RecordJSONSerialiser().load("fixed.json")
    assert len(records) == 2
    assert all(record.failures() == [] for record in records)


@pytest.mark.slow
def test_check(monkeypatch, capsys, test_data_path) -> None:
    code = run_cli(monkeypatch, "check", "--report", "report.json")
    with open("report.json", "r", encoding="utf8") as json_file:
        report = json.load(json_file)
    assert code == (0 if report["passed"] else 4)
    assert "mestre.identity" in capsys.readouterr().out
