import json
import os
import tempfile
from os import PathLike
from typing import Any, Dict, List

from ... import __version__
from ...algorithm.polyalg import parse_scalar
from ...commons.errors import RecordParseError
from ...commons.logging_config import logger
from ...data_container.record_schema import CheckLedger, CurveRecord


def dumps(data: Dict[str, Any]) -> str:
    """Canonical JSON text: sorted keys, UTF-8 characters kept, trailing newline."""
    return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def write_atomically(text: str, file_path: PathLike) -> None:
    """Write a file through a temporary file of the same directory and a rename."""
    directory = os.path.dirname(os.path.abspath(file_path))
    descriptor, temporary_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(descriptor, "w", encoding="utf8") as temporary_file:
            temporary_file.write(text)
        os.replace(temporary_path, file_path)
    except OSError:
        if os.path.exists(temporary_path):
            os.remove(temporary_path)
        raise


class RecordJSONSerialiser:
    """JSON serialiser for curve records."""

    def serialise(self, records: List[CurveRecord], file_path: PathLike) -> None:
        """Serialise curve records into a JSON formatted file.

        Parameters
        ----------
        records : List[CurveRecord]
            The records to serialise.
        file_path : PathLike
            The path to the file to save the records.
        """
        data = {
            "records": [record.to_dict() for record in records],
            "version": __version__,
        }
        write_atomically(dumps(data), file_path)
        logger.info("%d record(s) written to %s.", len(records), file_path)

    def load(self, file_path: PathLike) -> List[CurveRecord]:
        """Load curve records from a JSON serialisation.

        Every number is parsed, so that a malformed value is reported here
        rather than as a failed record.

        Parameters
        ----------
        file_path : PathLike
            The path to the file containing the serialised records.

        Returns
        -------
        List[CurveRecord]
            The records, in file order.

        Raises
        ------
        RecordParseError
            If the file is not valid JSON or a record is malformed.
        DivisionByZero
            If a rational has a zero denominator.
        """
        try:
            with open(file_path, "r", encoding="utf8") as json_file:
                data = json.load(json_file)
        except (OSError, json.JSONDecodeError) as error:
            raise RecordParseError(location=str(file_path), reason=str(error))
        if not isinstance(data, dict) or not isinstance(data.get("records"), list):
            raise RecordParseError(location=str(file_path), reason="no list of records")

        records = []
        for index, record_json in enumerate(data["records"]):
            if not isinstance(record_json, dict):
                raise RecordParseError(location=f"record {index}", reason="not an object")
            record = CurveRecord.from_dict(record_json)
            for text in (record.a, record.b, record.c, record.t, *record.offsets):
                parse_scalar(text)
            record.parsed_points()
            records.append(record)
        logger.info("%d record(s) read from %s.", len(records), file_path)
        return records


class LedgerJSONSerialiser:
    """JSON serialiser for consistency ledgers."""

    def serialise(self, ledger: CheckLedger, file_path: PathLike) -> None:
        """Serialise a ledger into a JSON formatted report.

        Parameters
        ----------
        ledger : CheckLedger
            The ledger to serialise.
        file_path : PathLike
            The path to the report file.
        """
        data = ledger.to_dict()
        data["version"] = __version__
        write_atomically(dumps(data), file_path)
