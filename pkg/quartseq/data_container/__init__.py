from .curve_schema import INFINITY, EvenQuartic, Point, QuarticCurve, WeierstrassModel
from .record_schema import CheckLedger, CurveRecord, LedgerEntry
from .sequence_schema import (
    HalfOffsetSequence,
    MestreDecomposition,
    ParamPoint,
    QKill,
    SequenceSpec,
    SequenceWitness,
    SquareRelation,
)
