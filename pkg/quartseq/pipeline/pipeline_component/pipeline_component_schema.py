from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, Dict

if TYPE_CHECKING:
    from ...data_container.record_schema import CheckLedger
    from ..pipeline_schema import Pipeline


class PipelineComponent(ABC):
    """A pipeline component is part of a pipeline performing one construction."""

    def __init__(self) -> None:
        """Initialise PipelineComponent instance."""

    @abstractmethod
    def check_resources(self) -> None:
        """Method to check that the component has access to all its required resources."""

    @abstractmethod
    def get_performance_report(self) -> Dict[str, Any]:
        """A getter for the pipeline component performance report.

        Returns
        -------
        Dict[str, Any]
            Stage timings and counters of the last run.
        """

    @abstractmethod
    def run(self, pipeline: "Pipeline") -> None:
        """Method that is responsible for the execution of the component.

        Parameters
        ----------
        pipeline : Pipeline
            The pipeline running, collecting the curve records.
        """

    @abstractmethod
    def record_checks(self, ledger: "CheckLedger") -> None:
        """Run the consistency checks of the construction.

        Parameters
        ----------
        ledger : CheckLedger
            The ledger the checks are appended to.
        """
