"""Command-line front end.

Exit codes: 0 success, 2 parse/usage error, 3 evaluation or domain error,
4 verification failure. Numeric output is fixed at 17 significant digits
and exact rationals print as "p/q" with positive q, so output diffs are
stable across runs and machines.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import Optional

from .dsl import ParseError, parse
from .quadrature import QuadratureError
from .series_engine import (
    EvalResult,
    EvaluationError,
    METHODS,
    OverNFamily,
    closed_form_andreoli,
    closed_form_arithmetic,
    closed_form_step,
    evaluate,
    exact_result,
    over_n_eval,
)
from .partial_fractions import decompose
from .special_functions import DomainError
from .verification import PAPER_SUITE

_EVAL_ERRORS = (DomainError, EvaluationError, QuadratureError, ValueError, ZeroDivisionError)


def _default_tolerance() -> float:
    raw = os.environ.get("SERIESUM_TOL")
    if raw is None:
        return 1e-12
    try:
        tol = float(raw)
    except ValueError:
        return 1e-12
    return tol if tol > 0 else 1e-12


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _record(
    echo: str, result: EvalResult, elapsed_ms: float
) -> dict:
    return {
        "input": echo,
        "method": result.method,
        "exact": None if result.exact is None else str(result.exact),
        "numeric": _fmt(result.numeric),
        "error_bound": _fmt(result.error_bound),
        "elapsed_ms": round(elapsed_ms, 3),
    }


def _print_record(record: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(record))
        return
    for key in ("input", "method", "exact", "numeric", "error_bound", "elapsed_ms"):
        value = record[key]
        if key == "exact" and value is None:
            continue
        print(f"{key:<12} {value}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected a rational like 3 or 5/2: {exc}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seriesum",
        description="Exact and certified-numeric evaluation of series of rational terms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a series given as a term expression")
    p_eval.add_argument("series", help='term expression, e.g. "1/(k*(k+1)*(k+2))"')
    p_eval.add_argument("--method", choices=METHODS, default="auto")
    p_eval.add_argument("--tol", type=float, default=None, help="absolute tolerance")
    p_eval.add_argument(
        "--from", dest="start", type=int, default=1, metavar="K0",
        help="first summation index (default 1)",
    )
    p_eval.add_argument("--json", action="store_true")

    p_family = sub.add_parser("family", help="closed forms of the product families")
    p_family.add_argument("family", choices=("andreoli", "arith", "step", "overn"))
    p_family.add_argument("--n", type=int)
    p_family.add_argument("--a", type=_rational)
    p_family.add_argument("--b", type=_rational)
    p_family.add_argument("--l", dest="stride", type=int)
    p_family.add_argument("--x", type=float)
    p_family.add_argument("--tol", type=float, default=None)
    p_family.add_argument("--json", action="store_true")

    p_dec = sub.add_parser("decompose", help="print the partial-fraction table")
    p_dec.add_argument("series")
    p_dec.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run the cross-validation suite")
    p_verify.add_argument("--suite", choices=("paper",), required=True)
    p_verify.add_argument("--json", action="store_true")

    return parser


def _require(args: argparse.Namespace, names: list[str]) -> list:
    values = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise DomainError(f"family requires --{'l' if name == 'stride' else name}")
        values.append(value)
    return values


def _cmd_eval(args: argparse.Namespace) -> int:
    tol = args.tol if args.tol is not None else _default_tolerance()
    started = time.perf_counter()
    try:
        spec = parse(args.series, start_index=args.start)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    try:
        result = evaluate(spec, method=args.method, tolerance=tol)
    except _EVAL_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    elapsed = (time.perf_counter() - started) * 1e3
    _print_record(_record(args.series, result, elapsed), args.json)
    return 0


def _cmd_family(args: argparse.Namespace) -> int:
    tol = args.tol if args.tol is not None else _default_tolerance()
    started = time.perf_counter()
    try:
        if args.family == "andreoli":
            (n,) = _require(args, ["n"])
            result = exact_result(closed_form_andreoli(n))
            echo = f"family andreoli n={n}"
        elif args.family == "arith":
            a, b, n = _require(args, ["a", "b", "n"])
            result = exact_result(closed_form_arithmetic(a, b, n))
            echo = f"family arith a={a} b={b} n={n}"
        elif args.family == "step":
            stride, n = _require(args, ["stride", "n"])
            result = exact_result(closed_form_step(stride, n))
            echo = f"family step l={stride} n={n}"
        else:
            x, stride = _require(args, ["x", "stride"])
            OverNFamily(x, stride)  # domain validation with a named message
            result = over_n_eval(x, stride, tol)
            echo = f"family overn x={_fmt(x)} l={stride}"
    except _EVAL_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    elapsed = (time.perf_counter() - started) * 1e3
    _print_record(_record(echo, result, elapsed), args.json)
    return 0





def _cmd_decompose(args: argparse.Namespace) -> int:
    try:
        spec = parse(args.series)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        table = decompose(spec.f)
    except _EVAL_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(
            json.dumps(
                {
                    "input": args.series,
                    "leading": str(table.leading),
                    "terms": [
                        {"shift": str(a), "order": j, "coefficient": str(c)}
                        for a, j, c in table.terms
                    ],
                }
            )
        )
        return 0
    print(f"input        {args.series}")
    if table.leading != 1:
        print(f"leading      {table.leading}")
    for a, j, c in table.terms:
        print(f"A[{a}, {j}] = {c}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    items = []
    for _, check in PAPER_SUITE:
        items.extend(check())
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "name": item.name,
                        "expected": item.expected,
                        "got": item.got,
                        "tolerance": item.tolerance,
                        "pass": item.passed,
                    }
                    for item in items
                ]
            )
        )
    else:
        for item in items:
            flag = "PASS" if item.passed else "FAIL"
            print(f"{flag}  {item.name}  expected: {item.expected}  got: {item.got}")
        bad = sum(1 for item in items if not item.passed)
        print(f"{len(items) - bad}/{len(items)} checks passed")
    return 0 if all(item.passed for item in items) else 4


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "family":
        return _cmd_family(args)
    if args.command == "decompose":
        return _cmd_decompose(args)
    return _cmd_verify(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
