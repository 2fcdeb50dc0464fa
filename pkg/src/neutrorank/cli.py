"""Command-line front end.

Exit codes: 0 success, 1 internal error, 2 bad command line, 3 malformed
input (syntax or layout), 4 invalid data (ranges, dimensions, weights,
descending intervals under strict validation).
"""

from __future__ import annotations

import argparse
import logging
import sys

from .aggregation import Operator
from .core import NeutroError, Policy, ValidationError
from .decision import apply_cost_criteria, rank
from .problem import ParseError, parse_problem
from .report import render_json, render_table

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_VALIDATION = 4

log = logging.getLogger("neutrorank")


def _weights(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="neutrorank",
        description="Rank alternatives from a single-valued or interval neutrosophic decision matrix.",
    )
    p.add_argument("--input", default="-", metavar="PATH", help="problem file ('-' for stdin, the default)")
    p.add_argument("--format", choices=["json", "csv"], help="input format (default: from extension, else json)")
    p.add_argument("--operator", choices=[o.value for o in Operator],
                   help="row aggregation (default: document option, else arithmetic)")
    p.add_argument("--validation", choices=[v.value for v in Policy],
                   help="interval validation policy (default: document option, else strict)")
    p.add_argument("--output", choices=["table", "json"], default="table")
    p.add_argument("--precision", type=int, default=4, help="decimals in table output (default 4)")
    p.add_argument("--weights", type=_weights, help="comma-separated criterion weights for CSV input")
    p.add_argument("--cost-criteria", default="", metavar="NAMES",
                   help="comma-separated criteria to complement before ranking (opt-in)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    if args.precision < 0:
        print("error: --precision must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    fmt = args.format or ("csv" if args.input.lower().endswith(".csv") else "json")

    try:
        source = _read(args.input)
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        doc = parse_problem(source, fmt, weights=args.weights,
                            validation=args.validation, operator=args.operator)
        matrix = doc.to_matrix()
        costs = [c.strip() for c in args.cost_criteria.split(",") if c.strip()]
        if costs:
            log.debug("complementing cost criteria %s", costs)
            matrix = apply_cost_criteria(matrix, costs)
        report = rank(matrix, doc.options.operator)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        for line in getattr(exc, "diagnostics", [str(exc)]):
            print(f"invalid input: {line}", file=sys.stderr)
        return EXIT_VALIDATION
    except NeutroError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception:
        log.exception("internal error")
        return EXIT_INTERNAL

    out = render_json(report) if args.output == "json" else render_table(report, args.precision)
    sys.stdout.write(out)
    return EXIT_OK


def run() -> None:
    sys.exit(main())
