from typing import Any, Dict

import pytest
from sympy import QQ

from quartseq.data_container import CheckLedger, CurveRecord, EvenQuartic, Point
from quartseq.pipeline.pipeline_component import PipelineComponent
from quartseq.pipeline.pipeline_schema import Pipeline


class SquaresComponent(PipelineComponent):
    """Emits y^2 = x^4 through (t + i)^2, i = 0, 1, 2."""

    def __init__(self, t: int) -> None:
        super().__init__()
        self.t = QQ(t)
        self.checked = False

    def check_resources(self) -> None:
        self.checked = True

    def get_performance_report(self) -> Dict[str, Any]:
        return {"t": self.t}

    def run(self, pipeline: Pipeline) -> None:
        offsets = [QQ(i) for i in range(3)]
        points = [Point((self.t + i) ** 2, (self.t + i) ** 4) for i in offsets]
        pipeline.records.append(CurveRecord.build(EvenQuartic(1, 0, 0), self.t, offsets, points))

    def record_checks(self, ledger: CheckLedger) -> None:
        ledger.hard(f"squares.{self.t}", True)


@pytest.fixture(scope="function")
def pipeline() -> Pipeline:
    return Pipeline(pipeline_components=[SquaresComponent(1), SquaresComponent(2)])


def test_empty_pipeline() -> None:
    empty_pipeline = Pipeline()
    assert empty_pipeline.pipeline_components == []
    assert empty_pipeline.run() == []
    assert empty_pipeline.check().passed


def test_build(pipeline) -> None:
    pipeline.build()
    assert all(component.checked for component in pipeline.pipeline_components)


def test_run(pipeline) -> None:
    records = pipeline.run()
    assert [record.t for record in records] == ["1", "2"]
    assert all(record.failures() == [] for record in records)


def test_check(pipeline) -> None:
    ledger = pipeline.check()
    assert [entry.name for entry in ledger.entries] == ["squares.1", "squares.2"]
    assert ledger.passed


def test_add_and_remove_components(pipeline) -> None:
    component = SquaresComponent(5)
    pipeline.add_pipeline_component(component)
    assert len(pipeline.pipeline_components) == 3
    pipeline.remove_pipeline_component(component)
    assert component not in pipeline.pipeline_components
