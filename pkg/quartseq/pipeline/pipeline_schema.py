from typing import List, Optional

from ..commons.logging_config import logger
from ..data_container.record_schema import CheckLedger, CurveRecord
from .pipeline_component.pipeline_component_schema import PipelineComponent


class Pipeline:
    """A Pipeline is the library main class. It runs the constructions and collects
    the curve records they emit and the checks they perform.

    Attributes
    ----------
    pipeline_components: List[PipelineComponent]
        The constructions to run, in order.
    records: List[CurveRecord]
        The curve records emitted by the components.
    ledger: CheckLedger
        The consistency checks filled by :meth:`check`.
    """

    def __init__(
        self,
        pipeline_components: Optional[List[PipelineComponent]] = None,
        records: Optional[List[CurveRecord]] = None,
    ) -> None:
        """Initialise Pipeline instance.

        Parameters
        ----------
        pipeline_components: List[PipelineComponent], optional
            The constructions to run, by default None.
        records: List[CurveRecord], optional
            Records to start from, by default None.
        """
        self.pipeline_components = pipeline_components
        self.records = records
        self.ledger = CheckLedger()

        if self.pipeline_components is None:
            self.pipeline_components = []

        if self.records is None:
            self.records = []

    def build(self) -> None:
        """Check the resources of every component."""
        for component in self.pipeline_components:
            component.check_resources()

    def add_pipeline_component(self, pipeline_component: PipelineComponent) -> None:
        """Add a component to the pipeline.

        Parameters
        ----------
        pipeline_component : PipelineComponent
            The pipeline component to add.
        """
        self.pipeline_components.append(pipeline_component)

    def remove_pipeline_component(self, pipeline_component: PipelineComponent) -> None:
        """Remove a component from the pipeline.

        Parameters
        ----------
        pipeline_component : PipelineComponent
            The pipeline component to remove.
        """
        self.pipeline_components.remove(pipeline_component)

    def run(self) -> List[CurveRecord]:
        """Run each pipeline component in order, collecting their records."""
        for component in self.pipeline_components:
            component.run(self)
        logger.info("Pipeline produced %d record(s).", len(self.records))
        return self.records

    def check(self) -> CheckLedger:
        """Fill the ledger with the checks of every component."""
        for component in self.pipeline_components:
            component.record_checks(self.ledger)
        logger.info(
            "Ledger holds %d check(s), %d hard failure(s).",
            len(self.ledger),
            len(self.ledger.hard_failures),
        )
        return self.ledger
