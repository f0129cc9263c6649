"""Command-line front end: ``cik table | verify | scan | eval``."""

from __future__ import annotations

import argparse
import math
import re
import sys
from math import factorial

from .clark_ismail.analysis import scan_nonnegativity
from .clark_ismail.exact import TABLE_ROUTES, build_table
from .clark_ismail.numeric import G_eval, f_eval_numeric, f_lower_bound_series
from .combinatorics import MemoLimitError
from .golden import golden_table
from .records import OutputRecord, format_exact, to_csv, to_json
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """'A..B' (inclusive) or a single integer 'A'."""
    m = _RANGE.match(text)
    if not m:
        raise UsageError(f"bad range {text!r}; expected A..B")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _pretty(table, js, ks) -> str:
    cells = [[format_exact(table[j, k]) for k in ks] for j in js]
    head = ["j\\k"] + [str(k) for k in ks]
    body = [[str(j)] + row for j, row in zip(js, cells)]
    widths = [max(len(r[c]) for r in [head] + body) for c in range(len(head))]
    return "\n".join("  ".join(s.rjust(w) for s, w in zip(r, widths)) for r in [head] + body) + "\n"


def cmd_table(args) -> int:
    js, ks = parse_range(args.j), parse_range(args.k)
    if js.start < 1 or ks.start < 0:
        raise UsageError("need j >= 1 and k >= 0")
    if args.method not in TABLE_ROUTES[args.kind]:
        choices = ", ".join(TABLE_ROUTES[args.kind])
        raise UsageError(f"no method {args.method!r} for {args.kind}; choose from {choices}")
    table = build_table(args.kind, js, ks, method=args.method)
    records = [OutputRecord.make(args.kind, j, k, table[j, k], args.method) for j in js for k in ks]
    if args.format == "csv":
        sys.stdout.write(to_csv(records))
    elif args.format == "json":
        sys.stdout.write(to_json(records))
    else:
        sys.stdout.write(_pretty(table, js, ks))
    if args.golden:
        ref = golden_table(args.kind)
        bad = table.mismatches(ref)
        compared = len(table.cells.keys() & ref.cells.keys())
        for j, k, got, want in bad:
            print(f"golden mismatch {args.kind}({j},{k}): computed {got}, reference {want}", file=sys.stderr)
        print(f"golden: {compared} cells compared, {len(bad)} mismatches", file=sys.stderr)
        if bad:
            return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite, jmax=args.jmax, kmax=args.kmax)
    status = EXIT_OK
    for name, failures in results.items():
        for route, j, k, lhs, rhs in failures:
            print(f"FAIL {route} j={j} k={k}: {lhs} != {rhs}")
        print(f"{name}: {'pass' if not failures else f'{len(failures)} failures'}")
        if failures:
            status = EXIT_FAIL
    return status


def cmd_scan(args) -> int:
    if args.jmax < 1 or args.kmax < 1:
        raise UsageError("scan bounds must be >= 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    out = None
    if args.out:
        try:
            out = open(args.out, "w", newline="")
        except OSError as exc:
            print(f"cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE
    report = scan_nonnegativity(args.kind, args.jmax, args.kmax, jobs=args.jobs)
    text = to_csv(OutputRecord.make(args.kind, j, k, v, "bernoulli_form") for j, k, v in report.negatives)
    if out is None:
        sys.stdout.write(text)
    else:
        with out:
            out.write(text)
            out.write(report.summary + "\n")
    print(report.summary)
    return EXIT_OK


def cmd_eval(args) -> int:
    if not math.isfinite(args.v):
        raise UsageError("v must be finite")
    if args.v == 0:
        raise UsageError("v = 0 has no numeric evaluation here; use `cik table` for exact values at 0")
    if args.j < 1:
        raise UsageError("j must be >= 1")
    if args.target == "G":
        if args.k is None or args.k < 0:
            raise UsageError("eval G needs --k >= 0")
        print(format(G_eval(args.j, args.k, args.v), ".17g"))
    elif args.target == "f":
        print(format(f_eval_numeric(args.j, args.v), ".17g"))
    else:
        if args.v < 0:
            raise UsageError("the lower bound needs v > 0")
        if args.terms < 1:
            raise UsageError("--terms must be >= 1")
        bound = f_lower_bound_series(args.j, args.v, args.terms)
        f = f_eval_numeric(args.j, args.v)
        print(f"bound {format(bound, '.17g')}")
        print(f"f/j! {format(f / factorial(args.j), '.17g')}")
        print(f"f {format(f, '.17g')}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cik", description="Exact coefficients of v^j/(1-e^-v) and related quantities.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="tabulate G_j^(k)(0), gamma(j,k) or C(j,k)")
    t.add_argument("kind", choices=["G", "gamma", "C"])
    t.add_argument("--j", default="1..9", help="inclusive range A..B (default 1..9)")
    t.add_argument("--k", default="0..9", help="inclusive range A..B (default 0..9)")
    t.add_argument("--format", choices=["csv", "json", "pretty"], default="pretty")
    t.add_argument("--golden", action="store_true", help="diff against the bundled reference tables")
    t.add_argument("--method", default="bernoulli_form")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run an invariant suite")
    v.add_argument("suite", choices=[*SUITES, "all"])
    v.add_argument("--jmax", type=int)
    v.add_argument("--kmax", type=int)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="search for negative gamma(j,k) or C(j,k)")
    s.add_argument("kind", choices=["gamma", "C"])
    s.add_argument("--jmax", type=int, required=True)
    s.add_argument("--kmax", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_scan)

    e = sub.add_parser("eval", help="floating-point evaluation at v != 0")
    e.add_argument("target", choices=["G", "f", "bound"])
    e.add_argument("--j", type=int, required=True)
    e.add_argument("--k", type=int)
    e.add_argument("--v", type=float, required=True)
    e.add_argument("--terms", type=int, default=10)
    e.set_defaults(func=cmd_eval)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, MemoLimitError) as exc:
        print(f"cik: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_USAGE
