"""Command-line front end.

Subcommands: ``qp-num`` (one deformed number), ``series`` (knot or link
polynomial series), ``table`` (knot table with classical names),
``verify`` (identity checks) and ``eval`` (expression evaluation and
identity assertion).

Exit codes: 0 on success, 1 on a failed verification check, failed
assertion or impossible exact operation, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from qpknot.errors import (
    BadRangeError,
    DivisionByZeroError,
    ExprSyntaxError,
    NegativeIndexError,
    NotDivisibleError,
    NotExpressibleError,
    UnknownCheckError,
)
from qpknot.exprparse import parse_expression, eval_expression
from qpknot.laurent import LaurentPoly
from qpknot.qpnumbers import Family, family_spec, qp_number
from qpknot.skein import InvariantKind, InvariantSeries, knot_series, link_series, to_az_form
from qpknot.verify import CheckReport, check_names, run_all, run_check

_FORMATS = ("text", "json", "csv", "latex")

_FAMILY_LATEX = {
    Family.ALEXANDER: "[{n}]^{{A}}",
    Family.JONES: "[{n}]^{{V}}",
    Family.HOMFLY: "[{n}]^{{H}}",
    Family.H1: "[{n}]^{{H_1}}",
    Family.H2: "[{n}]^{{H_2}}",
    Family.BMQ: "[{n}]_{{q}}",
}

_KNOT_NAMES = {0: "0_1", 1: "3_1", 2: "5_1", 3: "7_1", 4: "9_1"}


def latex_poly(p: LaurentPoly) -> str:
    """Render with braced exponents, same canonical term order as text."""
    if p.is_zero:
        return "0"
    chunks = []
    for mono, coeff in p.terms():
        mag = coeff if coeff > 0 else -coeff
        parts = []
        for v, e in sorted(mono.exponents.items()):
            if e == 1:
                parts.append(v)
            elif e.denominator == 1:
                parts.append(f"{v}^{{{e.numerator}}}")
            else:
                parts.append(f"{v}^{{{e.numerator}/{e.denominator}}}")
        body = " ".join(parts)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag} {body}"
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(chunks)


def _csv_rows(rows: list[tuple[int, LaurentPoly]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerow(["n", "polynomial"])
    for n, p in rows:
        writer.writerow([n, str(p)])
    return buf.getvalue()


def _emit_series(series: InvariantSeries, fmt: str, out) -> None:
    rows = [(n, series.entry(n)) for n in series.indices()]
    if fmt == "text":
        for n, p in rows:
            print(f"P({n},2) = {p}", file=out)
    elif fmt == "csv":
        out.write(_csv_rows(rows))
    elif fmt == "latex":
        for n, p in rows:
            print(f"$P_{{{n},2}} = {latex_poly(p)}$", file=out)
    else:
        print(json.dumps(series.to_json_dict()), file=out)


def _cmd_qp_num(args, out) -> int:
    family = Family(args.family)
    poly = qp_number(family_spec(family), args.n)
    if args.format == "text":
        print(poly, file=out)
    elif args.format == "json":
        print(
            json.dumps({"family": family.value, "n": args.n, "poly": poly.to_json_dict()}),
            file=out,
        )
    elif args.format == "csv":
        out.write(_csv_rows([(args.n, poly)]))
    else:
        label = _FAMILY_LATEX[family].format(n=args.n)
        print(f"${label} = {latex_poly(poly)}$", file=out)
    return 0


def _cmd_series(args, out) -> int:
    kind = InvariantKind(args.invariant)
    if args.knots:
        series = knot_series(kind, args.max)
    else:
        series = link_series(kind, args.max)
    _emit_series(series, args.format, out)
    return 0


def _cmd_table(args, out) -> int:
    kind = InvariantKind(args.invariant)
    series = knot_series(kind, args.max)
    entries = {}
    for n in series.indices():
        p = series.entry(n)
        entries[n] = to_az_form(p).poly if args.az else p
    series = InvariantSeries(kind, "knot", entries)
    if args.format == "text":
        for n in series.indices():
            m = (n - 1) // 2
            name = _KNOT_NAMES.get(m, "-")
            print(f"m={m}\tT({n},2)\t{name}\t{series.entry(n)}", file=out)
        return 0
    _emit_series(series, args.format, out)
    return 0


def _print_report(report: CheckReport, out) -> None:
    lo, hi = report.n_range
    status = "PASS" if report.passed else "FAIL"
    print(f"{status}  {report.name}  (n={lo}..{hi})", file=out)
    if report.detail:
        print(f"      {report.detail}", file=out)


def _cmd_verify(args, out) -> int:
    if args.check:
        reports = [run_check(args.check, args.n_max)]
    else:
        reports = run_all(args.n_max)
    for report in reports:
        _print_report(report, out)
    ok = all(r.passed for r in reports)
    print(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed", file=out)
    return 0 if ok else 1


def _cmd_eval(args, out) -> int:
    if args.assert_identity is not None:
        pieces = args.assert_identity.split("==")
        if len(pieces) != 2:
            print("error: --assert needs exactly one '=='", file=sys.stderr)
            return 2
        lhs = eval_expression(parse_expression(pieces[0]))
        rhs = eval_expression(parse_expression(pieces[1]))
        if lhs == rhs:
            print(f"identity holds: {lhs}", file=out)
            return 0
        print(f"identity FAILS: {lhs} != {rhs}", file=out)
        return 1
    poly = eval_expression(parse_expression(args.expr))
    print(poly, file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpknot",
        description="Exact torus-knot polynomial invariants via deformed integer families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qp-num", help="print one deformed number [n]")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--format", default="text", choices=_FORMATS)

    p = sub.add_parser("series", help="print a knot or link polynomial series")
    p.add_argument("--invariant", required=True, choices=[k.value for k in InvariantKind])
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--knots", action="store_true", help="torus knots T(2m+1,2), --max is m")
    group.add_argument("--links", action="store_true", help="series L(n,2), --max is n")
    p.add_argument("--max", required=True, type=int)
    p.add_argument("--format", default="text", choices=_FORMATS)

    p = sub.add_parser("table", help="knot table T(2m+1,2) with classical names")
    p.add_argument("--invariant", required=True, choices=[k.value for k in InvariantKind])
    p.add_argument("--max", required=True, type=int, help="largest m")
    p.add_argument("--format", default="text", choices=_FORMATS)
    p.add_argument("--az", action="store_true", help="rewrite entries over (a, z)")

    p = sub.add_parser("verify", help="run the identity checks")
    p.add_argument("--check", default=None, help=f"one of: {', '.join(check_names())}")
    p.add_argument("--n-max", dest="n_max", default=50, type=int)

    p = sub.add_parser("eval", help="evaluate an expression or assert an identity")
    p.add_argument("expr", nargs="?", default=None)
    p.add_argument("--assert", dest="assert_identity", default=None, metavar="'LHS == RHS'")

    return parser


_DISPATCH = {
    "qp-num": _cmd_qp_num,
    "series": _cmd_series,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "eval": _cmd_eval,
}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command == "eval" and (args.expr is None) == (args.assert_identity is None):
        print("error: eval needs an expression or --assert, not both", file=sys.stderr)
        return 2
    try:
        return _DISPATCH[args.command](args, out)
    except (ExprSyntaxError, UnknownCheckError, BadRangeError, NegativeIndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotDivisibleError, DivisionByZeroError, NotExpressibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
