"""Command-line interface.

Subcommands: dist (one distribution polynomial), table (family rows),
series (EGF coefficient dump), verify (identity checks), export
(JSON/CSV form of any of the others).  Exit codes: 0 success, 1
mathematical disagreement or refuted claim, 2 usage error (including
pattern syntax, method/pattern mismatch, and an exceeded enumeration
budget).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from .patterns import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    QuadrantPattern,
    distribution,
    marked_distribution,
)
from .permutations import DOWN_UP, UP_DOWN, AlternatingClass
from .polynomials import Poly
from .recurrences import Family, barred_poly, family_poly
from .series import egf_coeff, family_series
from .theorems import CHECKS, run_checks

RECURSIVE_PATTERN = QuadrantPattern(1, 0, None, 0)


class UsageError(Exception):
    pass


def _class_of(tag: str) -> AlternatingClass:
    return UP_DOWN if tag == "UD" else DOWN_UP


def _family_for(cls: AlternatingClass, n: int) -> Family:
    if cls is UP_DOWN:
        return Family.A if n % 2 == 0 else Family.B
    return Family.C if n % 2 == 0 else Family.D


def _parse_pattern(text: str) -> QuadrantPattern:
    try:
        return QuadrantPattern.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad pattern: {exc}") from None


def _parse_rows(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad row range (expected a..b): {text!r}") from None
    if a < 0 or b < a:
        raise UsageError(f"bad row range: {text!r}")
    return a, b


def _resolve_budget(args: argparse.Namespace) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("MMP_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"MMP_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def _require_recursive_pattern(pattern: QuadrantPattern, method: str) -> None:
    if pattern != RECURSIVE_PATTERN:
        raise UsageError(
            f"method {method!r} supports only the pattern "
            f"{RECURSIVE_PATTERN}; use --method oracle for {pattern}"
        )


def _series_order(args: argparse.Namespace, needed: int) -> int:
    order = args.order if args.order is not None else 13
    return max(order, needed)


def _dist_by_method(method: str, n: int, cls: AlternatingClass,
                    pattern: QuadrantPattern, args: argparse.Namespace) -> Poly:
    if method == "oracle":
        return distribution(n, cls, pattern, budget=_resolve_budget(args),
                            shards=args.shards)
    _require_recursive_pattern(pattern, method)
    fam = _family_for(cls, n)
    if method == "recursion":
        return family_poly(fam, n)
    return egf_coeff(family_series(fam, _series_order(args, n)), n)


def _print_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _print_csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _cmd_dist(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    pattern = _parse_pattern(args.pattern)
    cls = _class_of(args.cls)
    methods = ["oracle", "recursion", "series"] if args.method == "all" else [args.method]
    if args.method == "all":
        _require_recursive_pattern(pattern, "all")
    values = {m: _dist_by_method(m, args.n, cls, pattern, args) for m in methods}
    agreed = len(set(values.values())) == 1
    poly = next(iter(values.values()))

    if not agreed:
        for m, p in values.items():
            print(f"{m}: {p}", file=sys.stderr)
        print("agreement: no", file=sys.stderr)
        return 1
    if args.format == "json":
        _print_json({
            "n": args.n,
            "class": args.cls,
            "pattern": str(pattern),
            "coeffs": poly.to_strings(),
        })
    elif args.format == "csv":
        _print_csv(["power", "coefficient"],
                   [[str(k), s] for k, s in enumerate(poly.to_strings())])
    else:
        if len(values) > 1:
            for m in methods:
                print(f"{m}: {values[m]}")
            print("agreement: yes")
        else:
            print(poly)
    return 0


def _table_poly(fam: Family, n: int, method: str, args: argparse.Namespace) -> Poly:
    if method == "oracle":
        budget = _resolve_budget(args)
        if fam.barred:
            marked = marked_distribution(n, fam.alternating_class, RECURSIVE_PATTERN,
                                         budget=budget, shards=args.shards)
            return marked.barred()
        return distribution(n, fam.alternating_class, RECURSIVE_PATTERN,
                            budget=budget, shards=args.shards)
    if method == "recursion":
        return barred_poly(fam, n) if fam.barred else family_poly(fam, n)
    return egf_coeff(family_series(fam, _series_order(args, n)), n)


def _cmd_table(args: argparse.Namespace) -> int:
    fam = Family(args.family)
    lo, hi = _parse_rows(args.rows)
    methods = ["oracle", "recursion", "series"] if args.method == "all" else [args.method]
    rows = []
    for r in range(lo, hi + 1):
        n = fam.length(r)
        values = {m: _table_poly(fam, n, m, args) for m in methods}
        if len(set(values.values())) != 1:
            for m, p in values.items():
                print(f"row {r} ({m}): {p}", file=sys.stderr)
            print("agreement: no", file=sys.stderr)
            return 1
        rows.append((r, n, next(iter(values.values()))))

    if args.format == "json":
        _print_json({
            "family": fam.value,
            "pattern": str(RECURSIVE_PATTERN),
            "rows": [{"n": r, "length": n, "coeffs": p.to_strings()}
                     for r, n, p in rows],
        })
    elif args.format == "csv":
        _print_csv(["n", "length", "coeffs"],
                   [[str(r), str(n), " ".join(p.to_strings())] for r, n, p in rows])
    else:
        for r, _, p in rows:
            print(f"{r}\t{p}")
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    fam = Family(args.family)
    order = args.order if args.order is not None else 13
    if order < 0:
        raise UsageError("--order must be nonnegative")
    f = family_series(fam, order)
    polys = [egf_coeff(f, n) for n in range(order + 1)]
    if args.format == "json":
        _print_json({
            "family": fam.value,
            "order": order,
            "egf": {str(n): p.to_strings() for n, p in enumerate(polys)},
        })
    elif args.format == "csv":
        _print_csv(["t_power", "coeffs"],
                   [[str(n), " ".join(p.to_strings())] for n, p in enumerate(polys)])
    else:
        for n, p in enumerate(polys):
            print(f"t^{n}\t{p}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = args.checks or None
    try:
        verdicts = run_checks(names, n_max=args.n, order=args.order,
                              budget=_resolve_budget(args), shards=args.shards)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    failed = [v for v in verdicts if not v.ok]
    if args.format == "json":
        _print_json({"verdicts": [v.as_dict() for v in verdicts],
                     "ok": not failed})
    else:
        for v in verdicts:
            print(v)
        confirmed = sum(v.status == "confirmed" for v in verdicts)
        corrected = sum(v.status == "confirmed-after-correction" for v in verdicts)
        refuted = sum(v.status == "refuted" for v in verdicts)
        print(f"summary: {confirmed} confirmed, {corrected} corrected, "
              f"{refuted} refuted")
    return 1 if failed else 0


def _cmd_export(args: argparse.Namespace) -> int:
    if args.format == "text":
        raise UsageError("export emits machine-readable output; "
                         "choose --format json or csv")
    needed = {"dist": ("cls", "n", "pattern"), "table": ("family",),
              "series": ("family",), "verify": ()}
    missing = [f"--{name}".replace("cls", "class")
               for name in needed[args.what] if getattr(args, name) is None]
    if missing:
        raise UsageError(f"export --what {args.what} needs {', '.join(missing)}")
    if args.method is None:
        args.method = "oracle" if args.what == "dist" else "recursion"
    handler = {"dist": _cmd_dist, "table": _cmd_table,
               "series": _cmd_series, "verify": _cmd_verify}[args.what]
    return handler(args)


def _add_compute_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=None,
                   help="enumeration length cap (default: MMP_BUDGET or 13)")
    p.add_argument("--shards", type=int, default=1,
                   help="parallel enumeration shards (default 1)")


def _add_format_flag(p: argparse.ArgumentParser, default: str = "text") -> None:
    p.add_argument("--format", choices=["text", "json", "csv"], default=default)


def _add_dist_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--class", dest="cls", choices=["UD", "DU"], required=True,
                   help="UD: up-down permutations; DU: down-up")
    p.add_argument("--n", type=int, required=True, help="permutation length")
    p.add_argument("--pattern", required=True,
                   help="quadrant pattern, e.g. 1,0,e,0 (e = must be empty)")
    p.add_argument("--method", choices=["oracle", "recursion", "series", "all"],
                   default="oracle")
    p.add_argument("--order", type=int, default=None,
                   help="series truncation order (default 13)")
    _add_compute_flags(p)


def _add_table_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--rows", default="0..6", help="row range a..b (default 0..6)")
    p.add_argument("--method", choices=["oracle", "recursion", "series", "all"],
                   default="recursion")
    p.add_argument("--order", type=int, default=None)
    _add_compute_flags(p)


def _add_series_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--order", type=int, default=None,
                   help="truncation order (default 13)")


def _add_verify_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("checks", nargs="*", metavar="check",
                   help=f"checks to run (default all): {', '.join(CHECKS)}")
    p.add_argument("--n", type=int, default=None,
                   help="range scale; check-specific defaults when omitted")
    p.add_argument("--order", type=int, default=None)
    _add_compute_flags(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altmmp",
        description="Exact distributions of quadrant marked mesh pattern "
                    "statistics on alternating permutations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="one distribution polynomial")
    _add_dist_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("table", help="family table over a row range")
    _add_table_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("series", help="EGF coefficients of a family")
    _add_series_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("verify", help="run identity checks")
    _add_verify_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export", help="JSON/CSV form of another subcommand")
    p.add_argument("--what", choices=["dist", "table", "series", "verify"],
                   required=True)
    p.add_argument("checks", nargs="*", metavar="check",
                   help="for --what verify: checks to run (default all)")
    p.add_argument("--class", dest="cls", choices=["UD", "DU"], default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--pattern", default=None)
    p.add_argument("--family", choices=[f.value for f in Family], default=None)
    p.add_argument("--rows", default="0..6")
    p.add_argument("--method", choices=["oracle", "recursion", "series", "all"],
                   default=None)
    p.add_argument("--order", type=int, default=None)
    _add_compute_flags(p)
    _add_format_flag(p, default="json")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
