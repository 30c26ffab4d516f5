"""Command line: ``qshrb check``, ``qshrb expand`` and ``qshrb solve products``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict
from fractions import Fraction

from .braided_algebra import solve_compatible_products
from .errors import DegreeOverflow, GenericRankAmbiguity, ParseError, QshError, UnknownLetter, ValidationError
from .expand import PRODUCTS, expand, parse_q_value
from .fileformat import load_definitions
from .report import Report
from .scalar import parse_scalar
from .suite import SUITES, SessionConfig, UsageError, exit_status, run_suite
from .tensor import ENV_DEGREE_BOUND, default_bound

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qshrb", description="Exact checks for quantum quasi-shuffle, Rota-Baxter and bosonization identities.")
    p.add_argument("--bound", type=int, help=f"degree bound N (default: ${ENV_DEGREE_BOUND} or 5)")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="run check suites on a definition file")
    c.add_argument("suite", help=f"one of {', '.join(SUITES)}, all (comma-separated lists allowed)")
    c.add_argument("file")
    c.add_argument("--weight", help="weight λ (scalar literal)")
    c.add_argument("--degree-cap", type=int, help="degree cap K (tail degree for rota-baxter and braided-rb)")
    c.add_argument("--mode", choices=("weak", "strong"), default="strong")
    c.add_argument("--json", action="store_true", help="machine-readable report")
    c.add_argument("--parallel", action="store_true", help="run independent checks concurrently")

    e = sub.add_parser("expand", help="expand a product of two operands")
    e.add_argument("product", choices=PRODUCTS)
    e.add_argument("expr")
    e.add_argument("file")
    e.add_argument("--at-q", dest="at_q", help="substitute a rational value for q")
    e.add_argument("--weight", help="weight λ for qsh and diamond (default 1)")

    s = sub.add_parser("solve", help="solve for compatible products")
    s.add_argument("what", choices=("products",))
    s.add_argument("file")
    s.add_argument("--strict", action="store_true", help="fail when the generic rank drops at an exceptional q")
    s.add_argument("--json", action="store_true")
    return p


def _weight(text):
    if text is None:
        return None
    return parse_scalar(text)


def _print_reports(reports: list[Report], as_json: bool, source: str, suites) -> None:
    if as_json:
        doc = {
            "file": source,
            "suites": list(suites),
            "passed": all(r.passed for r in reports),
            "reports": [r.to_dict() for r in reports],
        }
        print(json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2))
        return
    for r in reports:
        print(r.text())
    failed = sum(1 for r in reports if not r.passed)
    print(f"{len(reports) - failed}/{len(reports)} checks passed")


def cmd_check(args) -> int:
    cfg = SessionConfig(
        degree_bound=default_bound(),
        checks=(args.suite,),
        parallel=args.parallel,
        output="json" if args.json else "text",
        weight=_weight(args.weight),
        degree_cap=args.degree_cap,
        mode=args.mode,
    )
    try:
        defs = load_definitions(args.file)
    except ValidationError as exc:
        rep = exc.report if exc.report is not None else Report(f"load[{args.file}]", "error", notes=[str(exc)])
        _print_reports([rep], args.json, args.file, (args.suite,))
        return EXIT_FAIL
    reports = run_suite(cfg, defs)
    _print_reports(reports, args.json, args.file, (args.suite,))
    return exit_status(reports)


def cmd_expand(args) -> int:
    defs = load_definitions(args.file, defer_checks=None)
    qv = parse_q_value(args.at_q) if args.at_q is not None else None
    print(expand(defs, args.product, args.expr, q_value=qv, weight=_weight(args.weight)))
    return EXIT_PASS


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "to_ascii"):
        return obj.to_ascii()
    return obj


def cmd_solve(args) -> int:
    defs = load_definitions(args.file)
    if defs.space is None:
        raise UsageError(f"{args.file} defines no braided space")
    try:
        sol = solve_compatible_products(defs.space, strict=args.strict)
        code = EXIT_PASS
    except GenericRankAmbiguity as exc:
        sol, code = exc.result, EXIT_FAIL
        print(f"generic rank is not attained everywhere: {exc}", file=sys.stderr)
    if args.json:
        d = asdict(sol)
        d["basis"] = [{f"{i + 1},{j + 1}": {str(k + 1): v for k, v in img.items()} for (i, j), img in b.items()} for b in sol.basis]
        print(json.dumps(_jsonable(d), sort_keys=True, ensure_ascii=False, indent=2))
    else:
        print(sol.summary())
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.bound is not None:
        if args.bound < 1:
            parser.error("--bound must be at least 1")
        os.environ[ENV_DEGREE_BOUND] = str(args.bound)
    try:
        default_bound()
    except ValueError as exc:
        print(f"qshrb: error: bad {ENV_DEGREE_BOUND}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    handler = {"check": cmd_check, "expand": cmd_expand, "solve": cmd_solve}[args.verb]
    try:
        return handler(args)
    except (ParseError, UsageError, UnknownLetter, DegreeOverflow) as exc:
        print(f"qshrb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"qshrb: invalid definition: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(exc.report.text(), file=sys.stderr)
        return EXIT_FAIL
    except QshError as exc:
        print(f"qshrb: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
