from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..algorithm.polyalg import Scalar, domain_of, format_function, parse_scalar, to_scalar
from ..commons.errors import QuartseqError, RecordParseError
from ..commons.logging_config import logger
from .curve_schema import EvenQuartic, Point
from .sequence_schema import is_consecutive_square_sequence

EVEN_QUARTIC = "even_quartic"


@dataclass
class CurveRecord:
    """Self-contained description of an even quartic carrying consecutive squares.

    Every number is kept in its canonical text form ("num/den" over Q,
    "(num)/(den)" over Q(t)), so that a record is checked without any outside state.

    Attributes
    ----------
    a, b, c : str
        Coefficients of y^2 = a x^4 + b x^2 + c.
    t : str
        The sequence parameter.
    offsets : List[str]
        Offsets i of the squares (t + i)^2.
    points : List[Tuple[str, str]]
        The points (x, y), one per offset.
    provenance : Dict[str, Any]
        Construction name, multiple index, parametrisation tag, software version
        and other bookkeeping.
    model : str
        Curve model tag, always "even_quartic".
    """

    a: str
    b: str
    c: str
    t: str
    offsets: List[str]
    points: List[Tuple[str, str]]
    provenance: Dict[str, Any] = field(default_factory=dict)
    model: str = EVEN_QUARTIC

    @classmethod
    def build(
        cls,
        curve: EvenQuartic,
        t: Scalar,
        offsets: Sequence[Scalar],
        points: Sequence[Point],
        provenance: Optional[Dict[str, Any]] = None,
    ) -> "CurveRecord":
        """Write a curve, its sequence and its points in canonical text form."""
        return cls(
            a=format_function(curve.a),
            b=format_function(curve.b),
            c=format_function(curve.c),
            t=format_function(t),
            offsets=[format_function(offset) for offset in offsets],
            points=[(format_function(point.x), format_function(point.y)) for point in points],
            provenance=dict(provenance or {}),
        )

    def curve(self) -> EvenQuartic:
        return EvenQuartic(parse_scalar(self.a), parse_scalar(self.b), parse_scalar(self.c))

    def parsed_points(self) -> List[Point]:
        return [Point(parse_scalar(x), parse_scalar(y)) for x, y in self.points]

    @property
    def key(self) -> Tuple[str, str, str]:
        return (self.a, self.b, self.c)

    def failures(self) -> List[str]:
        """Re-check the record.

        Returns
        -------
        List[str]
            The failed checks, empty when the record is valid.

        Raises
        ------
        RecordParseError
            If one of the numbers cannot be read.
        """
        if self.model != EVEN_QUARTIC:
            raise RecordParseError(location="model", reason=f"unknown model {self.model!r}")
        if len(self.points) != len(self.offsets):
            return [f"{len(self.points)} points for {len(self.offsets)} offsets"]
        curve = self.curve()
        points = self.parsed_points()
        failed = [
            f"point {index} ({x}, {y}) is not on the curve"
            for index, ((x, y), point) in enumerate(zip(self.points, points))
            if not curve.contains(point)
        ]
        offsets = [parse_scalar(offset) for offset in self.offsets]
        if not is_consecutive_square_sequence(
            parse_scalar(self.t), offsets, [point.x for point in points]
        ):
            failed.append("x-values are not the consecutive squares (t + i)^2")
        if len({point.x for point in points}) != len(points):
            failed.append("x-values are not distinct")
        return failed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "t": self.t,
            "offsets": list(self.offsets),
            "points": [[x, y] for x, y in self.points],
            "provenance": dict(self.provenance),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CurveRecord":
        try:
            return cls(
                a=str(data["a"]),
                b=str(data["b"]),
                c=str(data["c"]),
                t=str(data["t"]),
                offsets=[str(offset) for offset in data["offsets"]],
                points=[(str(x), str(y)) for x, y in data["points"]],
                provenance=dict(data.get("provenance", {})),
                model=str(data.get("model", EVEN_QUARTIC)),
            )
        except (KeyError, TypeError, ValueError) as error:
            raise RecordParseError(location="curve record", reason=repr(error))


PASS = "PASS"
FAIL = "FAIL"
MATCH = "MATCH"
MISMATCH = "MISMATCH"
PARAM_MISMATCH = "PARAM-MISMATCH"
SKIPPED = "SKIPPED"

HARD_STATUSES = (PASS, FAIL)
SOFT_STATUSES = (MATCH, MISMATCH, PARAM_MISMATCH, SKIPPED)


@dataclass
class LedgerEntry:
    """One named check of the ledger.

    Attributes
    ----------
    name : str
        The check name, e.g. "Q.x4.coeff".
    status : str
        PASS/FAIL for hard checks, MATCH/MISMATCH/PARAM-MISMATCH/SKIPPED for the others.
    hard : bool
        Whether the check is an internal identity.
    derived : str, optional
        The derived canonical value, reported for mismatches.
    detail : str, optional
        Free text about the check.
    """

    name: str
    status: str
    hard: bool
    derived: Optional[str] = None
    detail: Optional[str] = None

    def __post_init__(self) -> None:
        allowed = HARD_STATUSES if self.hard else SOFT_STATUSES
        if self.status not in allowed:
            raise ValueError(f"Status {self.status} is not allowed for check {self.name}.")

    def to_dict(self) -> Dict[str, Any]:
        data = {"name": self.name, "status": self.status, "hard": self.hard}
        if self.derived is not None:
            data["derived"] = self.derived
        if self.detail is not None:
            data["detail"] = self.detail
        return data


class CheckLedger:
    """Ordered list of checks, hard (identities) and soft (tabulated values)."""

    def __init__(self) -> None:
        self.entries: List[LedgerEntry] = []

    def hard(self, name: str, passed: bool, detail: Optional[str] = None) -> LedgerEntry:
        entry = LedgerEntry(name, PASS if passed else FAIL, hard=True, detail=detail)
        self.entries.append(entry)
        return entry

    def soft(
        self,
        name: str,
        status: str,
        derived: Optional[str] = None,
        detail: Optional[str] = None,
    ) -> LedgerEntry:
        if status == MATCH:
            derived = None
        entry = LedgerEntry(name, status, hard=False, derived=derived, detail=detail)
        self.entries.append(entry)
        return entry

    def check(self, name: str, identity: Callable[[], bool]) -> LedgerEntry:
        """Run a hard check, a library error counting as a failure."""
        try:
            passed = bool(identity())
        except QuartseqError as error:
            logger.error("Check %s raised %s", name, error)
            return self.hard(name, False, detail=str(error))
        if not passed:
            logger.error("Check %s failed.", name)
        return self.hard(name, passed)

    def compare(
        self,
        name: str,
        derived: Scalar,
        reference: Scalar,
        mismatch_status: str = MISMATCH,
    ) -> LedgerEntry:
        """Soft comparison of a derived value with a tabulated one."""
        domain = domain_of(derived, reference)
        difference = to_scalar(derived, domain) - to_scalar(reference, domain)
        status = MATCH if not difference else mismatch_status
        return self.soft(name, status, derived=format_function(derived))

    def __getitem__(self, name: str) -> LedgerEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def hard_failures(self) -> List[LedgerEntry]:
        return [entry for entry in self.entries if entry.hard and entry.status == FAIL]

    @property
    def passed(self) -> bool:
        return not self.hard_failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "entries": [entry.to_dict() for entry in self.entries],
            "passed": self.passed,
        }
