#!/usr/bin/env python
import argparse
import logging
import sys

from quartseq import Pipeline
from quartseq.algorithm.exact import parse_rational
from quartseq.commons.config import load_settings
from quartseq.commons.errors import DivisionByZero, QuartseqError, RecordParseError
from quartseq.commons.logging_config import logger
from quartseq.pipeline.pipeline_component import FixedSequenceConstruction, MestreConstruction
from quartseq.repository.serialiser import LedgerJSONSerialiser, RecordJSONSerialiser


def run_mestre(args) -> int:
    t = None if args.symbolic else parse_rational(args.t)
    pipeline = Pipeline(pipeline_components=[MestreConstruction(t)])
    pipeline.build()
    records = pipeline.run()
    RecordJSONSerialiser().serialise(records, args.out)
    print(f"Wrote {len(records)} record(s) to {args.out}")
    return 0


def run_fixed(args) -> int:
    construction = FixedSequenceConstruction(parse_rational(args.t), count=args.count)
    pipeline = Pipeline(pipeline_components=[construction])
    pipeline.build()
    records = pipeline.run()
    RecordJSONSerialiser().serialise(records, args.out)
    print(f"Wrote {len(records)} record(s) to {args.out}")
    return 0


def run_verify(args) -> int:
    records = RecordJSONSerialiser().load(args.path)
    failed = 0
    for index, record in enumerate(records):
        try:
            failures = record.failures()
        except (RecordParseError, DivisionByZero):
            raise
        except QuartseqError as error:
            failures = [str(error)]
        if failures:
            failed += 1
            print(f"record {index}: FAIL")
            for failure in failures:
                print(f"\t {failure}")
        else:
            print(f"record {index}: PASS")
    print(f"{len(records) - failed}/{len(records)} record(s) verified")
    return 1 if failed else 0


def run_check(args) -> int:
    pipeline = Pipeline(pipeline_components=[MestreConstruction(), FixedSequenceConstruction()])
    pipeline.build()
    ledger = pipeline.check()
    LedgerJSONSerialiser().serialise(ledger, args.report)
    for entry in ledger.entries:
        print(f"{entry.status:<15} {entry.name}")
    print(f"{len(ledger.hard_failures)} hard failure(s), report written to {args.report}")
    return 0 if ledger.passed else 4


def main():
    parser = argparse.ArgumentParser(
        description="Elliptic curves y^2 = a x^4 + b x^2 + c through consecutive squares."
    )
    parser.add_argument("--verbose", action="store_true", help="Log the construction stages.")
    subparsers = parser.add_subparsers(dest="command", required=True, help="Available commands")

    mestre_parser = subparsers.add_parser(
        "mestre", help="Curve through (t + i)^2 for i = +-1/2, +-3/2, +-5/2."
    )
    t_group = mestre_parser.add_mutually_exclusive_group(required=True)
    t_group.add_argument("--t", help="Rational value of t, as num/den.")
    t_group.add_argument("--symbolic", action="store_true", help="Build the curve over Q(t).")
    mestre_parser.add_argument("--out", required=True, help="Output JSON file.")
    mestre_parser.set_defaults(handler=run_mestre)

    fixed_parser = subparsers.add_parser(
        "fixed", help="Curves through (t + i)^2 for i = -2, ..., 3 from the Jacobian walk."
    )
    fixed_parser.add_argument("--t", required=True, help="Rational value of t, as num/den.")
    fixed_parser.add_argument("--count", type=int, default=1, help="Number of curves.")
    fixed_parser.add_argument("--out", required=True, help="Output JSON file.")
    fixed_parser.set_defaults(handler=run_fixed)

    verify_parser = subparsers.add_parser("verify", help="Re-check a file of curve records.")
    verify_parser.add_argument("path", help="JSON file of curve records.")
    verify_parser.set_defaults(handler=run_verify)

    check_parser = subparsers.add_parser(
        "check", help="Run the consistency ledger of both constructions."
    )
    check_parser.add_argument("--report", required=True, help="Output JSON report.")
    check_parser.set_defaults(handler=run_check)

    args = parser.parse_args()

    try:
        settings = load_settings()
        logger.setLevel(logging.INFO if args.verbose else settings.log_level)
        exit_code = args.handler(args)
    except QuartseqError as error:
        logger.error("%s failed: %s", args.command, error)
        print(f"quartseq {args.command}: {error}", file=sys.stderr)
        exit_code = error.exit_code
    sys.exit(exit_code)


if __name__ == "__main__":
    main()
