"""Command-line interface: ``exactfit fit | eval | verify``.

Exit codes: 0 success, 1 usage, 2 malformed or invalid input data,
3 domain violation (exponential fit on nonpositive ordinates), 4 oracle
verification mismatch.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import DataError, DomainError, ParseError
from .io import parse_dataset, parse_model, serialize_model
from .models import (
    ExponentialModel,
    PolynomialModel,
    eval_exponential,
    eval_polynomial,
    fit_exponential,
    fit_polynomial,
)
from .numeric import Scalar, scalar_format, scalar_parse
from .oracles import ORACLE_NAMES, verify_fit

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_DOMAIN = 3
EXIT_MISMATCH = 4

_GRID_LIMIT = 1_000_000


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this interface reserves 2
    for data errors, so usage problems exit 1 instead."""

    def error(self, message: str) -> "argparse.NoReturn":
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _UsageError(Exception):
    """Invalid option values detected after argument parsing."""


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="exactfit",
        description="Fit, evaluate, and cross-check interpolating models "
        "in direct monomial form.",
    )
    subparsers = parser.add_subparsers(
        dest="command", required=True, parser_class=_Parser
    )

    fit = subparsers.add_parser("fit", help="fit a model to sample points")
    fit.add_argument(
        "--model", choices=("poly", "exp"), required=True, help="model family"
    )
    fit.add_argument(
        "--arith",
        choices=("exact", "f64"),
        default=None,
        help="arithmetic backend (default: exact for poly, f64 for exp)",
    )
    fit.add_argument(
        "--input", default="-", help="dataset path, or - for stdin (default)"
    )
    fit.add_argument(
        "--output", default="-", help="result path, or - for stdout (default)"
    )
    fit.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output as a display formula or a model document",
    )

    evaluate = subparsers.add_parser(
        "eval", help="evaluate a previously fitted model"
    )
    evaluate.add_argument(
        "--model-file", required=True, help="path to a JSON model document"
    )
    where = evaluate.add_mutually_exclusive_group(required=True)
    where.add_argument("--at", help="comma-separated x values")
    where.add_argument(
        "--grid", help="START:STOP:STEP inclusive range (STEP > 0)"
    )
    evaluate.add_argument(
        "--output", default="-", help="result path, or - for stdout (default)"
    )

    verify = subparsers.add_parser(
        "verify", help="cross-check the fit against classical methods"
    )
    verify.add_argument(
        "--input", default="-", help="dataset path, or - for stdin (default)"
    )
    verify.add_argument(
        "--against",
        choices=ORACLE_NAMES + ("all",),
        required=True,
        help="which method(s) to check against",
    )
    verify.add_argument(
        "--arith", choices=("exact", "f64"), default="exact", help="arithmetic backend"
    )
    verify.add_argument(
        "--tol",
        type=float,
        default=1e-8,
        help="relative tolerance for f64 comparisons (default 1e-8)",
    )
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_output(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _sniff_format(text: str) -> str:
    head = text.lstrip()[:1]
    return "json" if head in ("[", "{") else "csv"


def _load_points(path: str, arithmetic: str) -> list[tuple[Scalar, Scalar]]:
    raw = _read_input(path)
    return parse_dataset(raw, _sniff_format(raw), arithmetic)


def _cmd_fit(args: argparse.Namespace) -> int:
    arithmetic = args.arith or ("exact" if args.model == "poly" else "f64")
    points = _load_points(args.input, arithmetic)
    if args.model == "poly":
        model = fit_polynomial(points)
    else:
        model = fit_exponential(points)
    source = None if args.input == "-" else args.input
    rendered = serialize_model(model, args.format, source=source)
    _write_output(args.output, rendered + "\n")
    return EXIT_OK


def _parse_eval_xs(args: argparse.Namespace, arithmetic: str) -> list[Scalar]:
    if args.at is not None:
        fields = [field.strip() for field in args.at.split(",")]
        if not all(fields):
            raise _UsageError(f"--at expects comma-separated values, got {args.at!r}")
        try:
            return [scalar_parse(field, arithmetic) for field in fields]
        except ParseError as exc:
            raise _UsageError(f"invalid --at value: {exc}") from exc
    fields = args.grid.split(":")
    if len(fields) != 3:
        raise _UsageError(f"--grid expects START:STOP:STEP, got {args.grid!r}")
    try:
        start, stop, step = (scalar_parse(field, arithmetic) for field in fields)
    except ParseError as exc:
        raise _UsageError(f"invalid --grid value: {exc}") from exc
    if not step > 0:
        raise _UsageError("--grid STEP must be positive")
    values: list[Scalar] = []
    index = 0
    while True:
        x = start + index * step
        if x > stop:
            break
        values.append(x)
        index += 1
        if index > _GRID_LIMIT:
            raise _UsageError(f"--grid produces more than {_GRID_LIMIT} points")
    return values


def _cmd_eval(args: argparse.Namespace) -> int:
    model = parse_model(_read_input(args.model_file))
    exact_model = isinstance(model, PolynomialModel) and not any(
        isinstance(c, float) for c in model.coefficients
    )
    arithmetic = "exact" if exact_model else "f64"
    xs = _parse_eval_xs(args, arithmetic)
    lines = []
    for x in xs:
        if isinstance(model, ExponentialModel):
            y: Scalar = eval_exponential(model, x)
        else:
            y = eval_polynomial(model, x)
        lines.append(f"{scalar_format(x)},{scalar_format(y)}")
    _write_output(args.output, "".join(line + "\n" for line in lines))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if not (math.isfinite(args.tol) and args.tol > 0):
        raise _UsageError("--tol must be a positive finite number")
    points = _load_points(args.input, args.arith)
    reports = verify_fit(points, against=args.against, tolerance=args.tol)
    lines = []
    for report in reports:
        coeff = (
            "n/a"
            if report.max_coefficient_discrepancy is None
            else scalar_format(report.max_coefficient_discrepancy)
        )
        lines.append(
            f"{report.method}: {'PASS' if report.passed else 'FAIL'} "
            f"max_coeff_diff={coeff} "
            f"max_residual={scalar_format(report.max_residual)}"
        )
    sys.stdout.write("".join(line + "\n" for line in lines))
    return EXIT_OK if all(report.passed for report in reports) else EXIT_MISMATCH


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "fit":
            return _cmd_fit(args)
        if args.command == "eval":
            return _cmd_eval(args)
        return _cmd_verify(args)
    except _UsageError as exc:
        print(f"exactfit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"exactfit: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ParseError, DataError) as exc:
        print(f"exactfit: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"exactfit: cannot read or write: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
