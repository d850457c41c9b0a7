"""Command-line front end.

Subcommands: root, series, circle, compare, oracle.  Results go to stdout,
diagnostics to stderr.  Exit codes: 0 success, 2 usage or parse error,
3 domain error (negative radicand, non-positive radius, ...).  Output is
deterministic: identical flags produce byte-identical output.  All rationals
are rendered in canonical ``p/q`` text and, in JSON, big numbers are always
emitted as decimal strings, never as native numbers.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from .analysis import ComparisonTable, ErrorRow, compare_methods, decimal_oracle_root, error_table
from .rational import DomainError, parse_rational
from .roots import (
    ApproximationReport,
    BoundSide,
    CircleMode,
    UnitChain,
    baudhayana_series,
    brahmagupta_circle,
    classify_bound,
    floor_root,
    morouzi_first_correction,
    residual,
    unit_chain,
)

DEFAULT_MAX_ITERS = 64


def _mixed(x: Fraction) -> str:
    """Human display form: '3 3/7' for improper fractions, plain otherwise."""
    if x.denominator == 1:
        return str(x)
    whole, rem = divmod(abs(x.numerator), x.denominator)
    if whole == 0:
        return str(x)
    sign = "-" if x < 0 else ""
    return f"{sign}{whole} {rem}/{x.denominator}"


def _approximant_display(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x)
    return f"{_mixed(x)} = {x}"


def _kv_lines(pairs: list[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs)


def _columns(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _render_chain(chain: UnitChain, ascii_dots: bool) -> str:
    dot = "*" if ascii_dots else "·"
    if not chain.all_integral:
        ratios = ", ".join(str(r) for r in chain.ratios)
        return f"ratios [{ratios}] (non-integral)"
    terms = []
    denoms: list[str] = []
    for sign, ratio in zip(chain.signs, chain.ratios):
        denoms.append(str(ratio.numerator))
        body = denoms[0] if len(denoms) == 1 else "(" + dot.join(denoms) + ")"
        terms.append(("+" if sign > 0 else "-") + "1/" + body)
    return " ".join(terms)


def _error_row_json(row: ErrorRow) -> dict:
    return {
        "n": row.index,
        "approximant": str(row.approximant),
        "abs_error": str(row.abs_error),
        "correct_digits": row.correct_digits,
        "num_bits": row.num_bits,
        "den_bits": row.den_bits,
    }


def _error_block(rows: list[ErrorRow]) -> str:
    table_rows = [
        [str(r.index), str(r.approximant), str(r.abs_error), str(r.correct_digits), str(r.num_bits), str(r.den_bits)]
        for r in rows
    ]
    return _columns(["n", "approximant", "abs_error", "correct_digits", "num_bits", "den_bits"], table_rows)


def cmd_root(args: argparse.Namespace) -> int:
    fr = floor_root(args.radicand, args.degree)
    correction = morouzi_first_correction(fr, args.degree)
    x = fr.root + correction
    bound = classify_bound(residual(args.radicand, x, args.degree))
    if args.format == "json":
        payload = {
            "radicand": str(args.radicand),
            "degree": args.degree,
            "floor_root": str(fr.root),
            "remainder": str(fr.remainder),
            "correction": str(correction),
            "approximant": str(x),
            "bound": bound.value,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(
            _kv_lines(
                [
                    ("radicand", str(args.radicand)),
                    ("degree", str(args.degree)),
                    ("floor root", str(fr.root)),
                    ("remainder", str(fr.remainder)),
                    ("correction", str(correction)),
                    ("approximant", _approximant_display(x)),
                    ("bound", bound.value),
                ]
            )
        )
    return 0


def _report_json(report: ApproximationReport, chain: UnitChain | None, errors: list[ErrorRow] | None) -> dict:
    payload: dict = {
        "problem": {"radicand": str(report.problem.radicand), "degree": report.problem.degree},
        "records": [
            {
                "n": rec.index,
                "epsilon": str(rec.correction),
                "x": str(rec.approximant),
                "residual": str(rec.residual),
                "bound": rec.bound.value,
                "rule": rec.rule.value,
            }
            for rec in report.records
        ],
    }
    if chain is not None:
        payload["chain"] = {
            "signs": list(chain.signs),
            "ratios": [str(r) for r in chain.ratios],
            "all_integral": chain.all_integral,
        }
    if errors is not None:
        payload["errors"] = [_error_row_json(r) for r in errors]
    return payload


def cmd_series(args: argparse.Namespace) -> int:
    if args.iters < 0:
        print(f"error: --iters must be >= 0, got {args.iters}", file=sys.stderr)
        return 2
    if args.iters > args.max_iters:
        print(
            f"error: --iters {args.iters} exceeds the cap of {args.max_iters}; "
            "denominators roughly square per step, raise --max-iters to proceed",
            file=sys.stderr,
        )
        return 2
    report = baudhayana_series(args.radicand, args.degree, args.iters)
    has_corrections = len(report.records) > 1
    chain = unit_chain(report) if args.chain and has_corrections else None
    report.chain = chain
    errors = error_table(report, args.digits) if args.digits is not None else None
    if args.format == "json":
        print(json.dumps(_report_json(report, chain, errors), indent=2))
        return 0
    rows = [
        [str(rec.index), str(rec.correction), str(rec.approximant), str(rec.residual), rec.bound.value]
        for rec in report.records
    ]
    print(_columns(["n", "epsilon", "x", "residual", "bound"], rows))
    if chain is not None:
        print(f"chain: {_render_chain(chain, args.ascii)}")
    if errors is not None:
        print()
        print(_error_block(errors))
    return 0


def cmd_circle(args: argparse.Namespace) -> int:
    result = brahmagupta_circle(args.radius, CircleMode(args.mode))
    if args.format == "json":
        payload = {
            "radius": str(args.radius),
            "mode": result.mode.value,
            "area": str(result.area),
            "circumference": str(result.circumference),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(
            _kv_lines(
                [
                    ("radius", str(args.radius)),
                    ("mode", result.mode.value),
                    ("area", _approximant_display(result.area)),
                    ("circumference", _approximant_display(result.circumference)),
                ]
            )
        )
    return 0


def _comparison_rows(table: ComparisonTable) -> list[list[str]]:
    rows = []
    for name, method_rows in (("series", table.series), ("pure-newton", table.pure_newton)):
        for r in method_rows:
            bound = classify_bound(residual(table.radicand, r.approximant, table.degree))
            rows.append(
                [
                    str(r.index),
                    name,
                    str(r.approximant),
                    bound.value,
                    str(r.abs_error),
                    str(r.correct_digits),
                    str(r.num_bits),
                    str(r.den_bits),
                ]
            )
    rows.sort(key=lambda row: (int(row[0]), row[1]))
    return rows


def cmd_compare(args: argparse.Namespace) -> int:
    if args.iters < 1:
        print(f"error: --iters must be >= 1, got {args.iters}", file=sys.stderr)
        return 2
    if args.iters > args.max_iters:
        print(
            f"error: --iters {args.iters} exceeds the cap of {args.max_iters}; raise --max-iters to proceed",
            file=sys.stderr,
        )
        return 2
    table = compare_methods(args.radicand, args.degree, args.iters, args.digits)
    if args.format == "json":
        payload = {
            "radicand": str(table.radicand),
            "degree": table.degree,
            "digits": table.digits,
            "methods": {
                "series": [_error_row_json(r) for r in table.series],
                "pure_newton": [_error_row_json(r) for r in table.pure_newton],
            },
        }
        print(json.dumps(payload, indent=2))
    else:
        headers = ["n", "method", "x", "bound", "abs_error", "correct_digits", "num_bits", "den_bits"]
        print(_columns(headers, _comparison_rows(table)))
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.digits < 1:
        print(f"error: --digits must be >= 1, got {args.digits}", file=sys.stderr)
        return 2
    print(decimal_oracle_root(args.radicand, args.degree, args.digits))
    return 0


def _add_common(parser: argparse.ArgumentParser, *, degree: bool = True, fmt: bool = True) -> None:
    if degree:
        parser.add_argument("--degree", type=int, choices=(2, 3), default=2, help="root degree (default 2)")
    if fmt:
        parser.add_argument("--format", choices=("table", "json"), default="table", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surds",
        description="Exact historical root approximations: first corrections, alternating series, circle rules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("root", help="floor root plus the first correction")
    p.add_argument("radicand", type=int, help="integer radicand (arbitrary size)")
    _add_common(p)
    p.set_defaults(func=cmd_root)

    p = sub.add_parser("series", help="alternating under/over series with exact residuals")
    p.add_argument("radicand", type=int, help="integer radicand (arbitrary size)")
    _add_common(p)
    p.add_argument("--iters", type=int, default=3, help="number of corrections (default 3)")
    p.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS, help="safety cap on --iters (default 64)")
    p.add_argument("--chain", action="store_true", help="also emit the unit-fraction chain (skipped for exact roots)")
    p.add_argument(
        "--digits",
        type=int,
        nargs="?",
        const=10,
        default=None,
        metavar="P",
        help="also emit per-iteration error rows at P decimal digits (default 10 when flag is bare)",
    )
    p.add_argument("--ascii", action="store_true", help="render the chain with '*' instead of '·'")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("circle", help="circle area and circumference under the two historical rules")
    # let "-3/4" reach the radius converter (and then fail as a domain error)
    # instead of being mistaken for an option
    p._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")
    p.add_argument("radius", type=parse_rational, help="radius as p/q or a bare integer")
    p.add_argument("--mode", choices=("gross", "subtle"), default="subtle", help="pi = 3 or pi = sqrt(10) (default)")
    _add_common(p, degree=False)
    p.set_defaults(func=cmd_circle)

    p = sub.add_parser("compare", help="series versus a plain Newton run from the same floor seed")
    p.add_argument("radicand", type=int, help="integer radicand (arbitrary size)")
    _add_common(p)
    p.add_argument("--iters", type=int, default=4, help="number of corrections (default 4)")
    p.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS, help="safety cap on --iters (default 64)")
    p.add_argument("--digits", type=int, default=12, help="decimal digits for error rows (default 12)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("oracle", help="truncated decimal of the true root by integer binary search")
    p.add_argument("radicand", type=int, help="integer radicand (arbitrary size)")
    _add_common(p, fmt=False)
    p.add_argument("--digits", type=int, default=20, help="decimal digits (default 20)")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
