"""Command-line interface.

Subcommands: spectrum, frobenius, jordan, filtrations, reflexive, verify.
Exit codes: 0 success, 1 invalid input (bad weights, unknown flags),
2 verify found failing identities.
"""

from __future__ import annotations

import argparse
import sys

from . import report
from .frobenius import initial_data
from .reflexive import DimensionTooLarge, enumerate_reflexive
from .verify import ALL_SUITES, verify_all
from .weights import WeightSystem, WeightSystemError, make_weight_system


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the CLI contract reserves 2 for
    # failed verification, so remap every parse problem to exit 1
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _parse_weights(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise _UsageError(f"bad weight list {text!r}: {exc}") from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="weightspec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, weights=True):
        if weights:
            p.add_argument("-w", "--weights", required=True, metavar="W0,W1,...")
            p.add_argument(
                "--allow-gcd-normalize",
                action="store_true",
                help="divide out a common factor instead of rejecting",
            )
        p.add_argument(
            "--format",
            choices=("json", "csv", "table"),
            default="table",
        )

    for name in ("spectrum", "frobenius", "jordan", "filtrations"):
        add_common(sub.add_parser(name))

    reflexive = sub.add_parser("reflexive")
    reflexive.add_argument("-n", "--dimension", type=int, required=True)
    reflexive.add_argument("--max-dimension", type=int, default=5)
    reflexive.add_argument(
        "--format", choices=("json", "csv", "table"), default="table"
    )

    verify = sub.add_parser("verify")
    add_common(verify)
    verify.add_argument(
        "--all", action="store_true", help="run every suite (the default)"
    )
    verify.add_argument(
        "--suite",
        action="append",
        choices=sorted(ALL_SUITES),
        help="run only the named suite (repeatable)",
    )
    return parser


def _weight_system(args) -> WeightSystem:
    return make_weight_system(
        _parse_weights(args.weights),
        allow_gcd_normalize=getattr(args, "allow_gcd_normalize", False),
    )


def _emit(args, kind: str, w: WeightSystem, payload, headers_rows) -> None:
    if args.format == "json":
        sys.stdout.write(
            report.to_json(report.envelope(kind, payload, w, list(w.warnings)))
        )
    elif args.format == "csv":
        headers, rows = headers_rows
        sys.stdout.write(report.render_csv(headers, rows))
    else:
        headers, rows = headers_rows
        sys.stdout.write(report.render_table(headers, rows))


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "spectrum":
            w = _weight_system(args)
            _emit(args, "spectrum", w, report.spectrum_payload(w), report.spectrum_rows(w))
        elif args.command == "frobenius":
            w = _weight_system(args)
            data = initial_data(w)
            headers = ["k", "sigma", "pairs_with"]
            rows = [
                [
                    str(k),
                    report.rational_text(data.a_inf[k][k]),
                    str(data.metric[k].index(1)),
                ]
                for k in range(w.mu)
            ]
            _emit(args, "frobenius", w, report.frobenius_payload(w), (headers, rows))
        elif args.command == "jordan":
            w = _weight_system(args)
            _emit(args, "jordan", w, report.jordan_payload(w), report.jordan_rows(w))
        elif args.command == "filtrations":
            w = _weight_system(args)
            _emit(
                args,
                "filtrations",
                w,
                report.filtrations_payload(w),
                report.filtration_rows(w),
            )
        elif args.command == "reflexive":
            return _run_reflexive(args)
        elif args.command == "verify":
            return _run_verify(args)
        return 0
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (WeightSystemError, DimensionTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _run_reflexive(args) -> int:
    records = enumerate_reflexive(args.dimension, max_dimension=args.max_dimension)
    emit_reflexive_table(args.dimension, args.format, records=records)
    return 0


def emit_reflexive_table(n: int, fmt: str = "table", records=None) -> None:
    """Write the enumeration for dimension n to stdout in the requested
    format (rows sorted by (mu, weights); table rows end in '| mu')."""
    if records is None:
        records = enumerate_reflexive(n)
    if fmt == "json":
        sys.stdout.write(
            report.to_json(report.envelope("reflexive-list", report.reflexive_payload(records, n)))
        )
    elif fmt == "csv":
        sys.stdout.write(report.reflexive_csv(records, n))
    else:
        sys.stdout.write(report.reflexive_table_text(records))


def _run_verify(args) -> int:
    w = _weight_system(args)
    suites = args.suite if args.suite else None
    results = verify_all(w, suites)
    payload = report.verify_payload(results)
    failures = payload["failures"]
    if args.format == "json":
        sys.stdout.write(
            report.to_json(report.envelope("verify-summary", payload, w, list(w.warnings)))
        )
    else:
        headers = ["suite", "status"]
        rows = [[name, status] for name, status in payload["suites"].items()]
        sys.stdout.write(report.render_table(headers, rows))
        for message in failures:
            sys.stdout.write(f"FAILED: {message}\n")
    return 2 if failures else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
