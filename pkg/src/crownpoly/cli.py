"""Command-line front end.

Exit codes: 0 all checks pass, 1 a mathematical disagreement, 2 the step
budget ran out (partial output is flagged), 64 usage error.  Data goes to
stdout, diagnostics to stderr, and identical arguments give identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import faces, hstar, order_poly, scans, verify
from .budget import Budget, default_budget
from .errors import DomainError, MathError, ResourceError
from .poset import Poset, make_crown, make_zigzag

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64

SCAN_DEFAULT_RANGES = {
    "f-logconcave": (1, 50),
    "f-not-realrooted": (2, 6),
    "hstar-realrooted": (2, 5),
    "boolean-hstar": (1, 4),
    "omega-nonneg": (1, 10),
    "polygon-ehrhart-nonneg": (3, 8),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``"A..B"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _vec(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


def _pretty_vec(v: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _dump(obj) -> str:
    return json.dumps(obj) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- tables ----------------------------------------------------------------------


def _f_rows(ns: list[int], oracle: bool, budget: Budget, rows: list[dict]) -> None:
    for n in ns:
        if n < 1:
            raise UsageError("f-vector tables need n >= 1")
        row = {"n": n, "f": faces.fvector_formula(n).to_list()}
        if oracle:
            row["oracle"] = faces.fvector_oracle(n, budget).to_list()
            row["agree"] = row["oracle"] == row["f"]
        rows.append(row)


def _h_rows(ns: list[int], methods: list[str], budget: Budget, rows: list[dict]) -> None:
    for n in ns:
        if n < 1:
            raise UsageError("h* tables need n >= 1")
        report = hstar.hstar_all(2 * n, methods, budget)
        row = {"n": n, **report.by_method, "agree": report.agree}
        note = hstar.table2_discrepancy(n, report.h)
        if note:
            row["note"] = note
        rows.append(row)


def cmd_tables(args, budget: Budget) -> int:
    ns = parse_range(args.n)
    methods = ["cswap", "descents", "ehrhart"] if args.method == "all" else [args.method]
    rows: list[dict] = []
    partial = False
    try:
        if args.hstar:
            _h_rows(ns, methods, budget, rows)
        else:
            _f_rows(ns, args.oracle, budget, rows)
    except ResourceError as exc:
        partial = True
        print(f"budget exhausted after {len(rows)} rows: {exc}", file=sys.stderr)

    for row in rows:
        if "note" in row:
            print(f"note: {row['note']}", file=sys.stderr)

    if args.format == "json":
        sys.stdout.write(_dump({"rows": rows, "partial": partial}))
    elif args.hstar:
        if args.format == "csv":
            sys.stdout.write(_csv(
                ["n", *methods, "agree"],
                [[r["n"], *(_vec(r[m]) for m in methods), str(r["agree"]).lower()] for r in rows],
            ))
        else:
            for r in rows:
                cells = "  ".join(f"{m}={_pretty_vec(r[m])}" for m in methods)
                sys.stdout.write(f"{r['n']}  {cells}  agree={r['agree']}\n")
    else:
        if args.format == "csv":
            header = ["n", "f"] + (["oracle", "agree"] if args.oracle else [])
            out = []
            for r in rows:
                line = [r["n"], _vec(r["f"])]
                if args.oracle:
                    line += [_vec(r["oracle"]), str(r["agree"]).lower()]
                out.append(line)
            sys.stdout.write(_csv(header, out))
        else:
            for r in rows:
                extra = f"  oracle agree={r['agree']}" if args.oracle else ""
                sys.stdout.write(f"{r['n']}  {_pretty_vec(r['f'])}{extra}\n")

    if partial:
        if args.format != "json":
            sys.stdout.write("# partial: budget exhausted\n")
        return EXIT_BUDGET
    return EXIT_OK if all(r.get("agree", True) for r in rows) else EXIT_DISAGREE


# -- verify -------------------------------------------------------------------------


def cmd_verify(args, budget: Budget) -> int:
    ns = parse_range(args.n)
    names = args.suite or list(verify.SUITES)
    results = []
    partial = False
    for name in names:
        try:
            results.append(verify.SUITES[name].run(ns, budget))
        except ResourceError as exc:
            partial = True
            print(f"budget exhausted in suite {name}: {exc}", file=sys.stderr)
            break
    ok = all(r.ok for r in results)

    if args.format == "json":
        sys.stdout.write(_dump({
            "ok": ok and not partial,
            "partial": partial,
            "suites": [r.to_dict() for r in results],
        }))
    else:
        for r in results:
            for row in r.rows:
                extras = " ".join(
                    f"{k}={v}" for k, v in row.items()
                    if k not in ("n", "ok") and v not in ([], None)
                )
                verdict = "pass" if row["ok"] else "FAIL"
                sys.stdout.write(f"{r.name} n={row['n']} {verdict} {extras}".rstrip() + "\n")
            if r.skipped:
                sys.stdout.write(f"{r.name} skipped n={_vec(r.skipped)}\n")
        sys.stdout.write(("partial" if partial else "pass" if ok else "FAIL") + "\n")

    if partial:
        return EXIT_BUDGET
    return EXIT_OK if ok else EXIT_DISAGREE


# -- scan -----------------------------------------------------------------------------


def cmd_scan(args, budget: Budget) -> int:
    if args.n:
        ns = parse_range(args.n)
    else:
        lo, hi = SCAN_DEFAULT_RANGES[args.conjecture]
        ns = list(range(lo, hi + 1))
    partial = False
    rows: list[dict] = []
    try:
        rows = scans.scan(args.conjecture, ns, budget)
    except ResourceError as exc:
        partial = True
        print(f"budget exhausted: {exc}", file=sys.stderr)

    holds = all(r["holds"] is not False for r in rows)
    if args.format == "json":
        sys.stdout.write(_dump({
            "conjecture": args.conjecture,
            "range": [ns[0], ns[-1]],
            "rows": rows,
            "holds_in_range": holds and not partial,
            "partial": partial,
        }))
    elif args.format == "csv":
        sys.stdout.write(_csv(["n", "holds"], [[r["n"], str(r["holds"]).lower()] for r in rows]))
    else:
        for r in rows:
            sys.stdout.write(f"{args.conjecture} n={r['n']} {r['holds']}\n")
    if partial:
        return EXIT_BUDGET
    return EXIT_OK if holds else EXIT_DISAGREE


# -- single objects -------------------------------------------------------------------


def cmd_faces(args, budget: Budget) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    f = faces.fvector_formula(args.n).to_list()
    out = {"n": args.n, "f": f}
    agree = True
    if args.oracle:
        out["oracle"] = faces.fvector_oracle(args.n, budget).to_list()
        agree = out["oracle"] == f
        out["agree"] = agree
    sys.stdout.write(_dump(out))
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_hstar(args, budget: Budget) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    methods = ["cswap", "descents", "ehrhart"] if args.method == "all" else [args.method]
    report = hstar.hstar_all(2 * args.n, methods, budget)
    gamma = hstar.gamma_from_hstar(report.h, 2 * args.n - 2).to_list()
    out = {"n": args.n, "h": report.h, "gamma": gamma, "agree": report.agree, "methods": report.by_method}
    note = hstar.table2_discrepancy(args.n, report.h)
    if note:
        out["note"] = note
        print(f"note: {note}", file=sys.stderr)
    sys.stdout.write(_dump(out))
    return EXIT_OK if report.agree else EXIT_DISAGREE


def _poset_from_args(args) -> Poset:
    if args.crown is not None:
        return make_crown(args.crown)
    if args.zigzag is not None:
        return make_zigzag(args.zigzag)
    text = args.poset
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        return Poset.from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read poset: {exc}") from None


def cmd_omega(args, budget: Budget) -> int:
    p = _poset_from_args(args)
    result = order_poly.omega(p, budget)
    sys.stdout.write(_dump({
        "poset": p.to_dict(),
        "omega": result.poly.to_json(),
        "ehrhart": order_poly.ehrhart(result.poly).to_json(),
        "method": result.method.value,
    }))
    return EXIT_OK


# -- entry point -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="crownpoly", description="Invariants of crown order polytopes.")
    parser.add_argument("--budget", type=int, default=None,
                        help="maximum elementary steps (default from CROWNPOLY_BUDGET or 10^9)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("tables", help="f-vector or h*-vector tables")
    t.add_argument("--n", default="2..6", help="range A..B")
    t.add_argument("--format", choices=["json", "csv", "pretty"], default="csv")
    t.add_argument("--hstar", action="store_true", help="h*-vectors instead of f-vectors")
    t.add_argument("--method", choices=["cswap", "descents", "ehrhart", "all"], default="all")
    t.add_argument("--oracle", action="store_true", help="add the CCP enumeration column")
    t.set_defaults(func=cmd_tables)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--n", default="2..4")
    v.add_argument("--suite", action="append", choices=sorted(verify.SUITES))
    v.add_argument("--format", choices=["json", "pretty"], default="pretty")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="finite conjecture scans")
    s.add_argument("--conjecture", required=True, choices=sorted(scans.CONJECTURES))
    s.add_argument("--n", default=None)
    s.add_argument("--format", choices=["json", "csv", "pretty"], default="pretty")
    s.set_defaults(func=cmd_scan)

    f = sub.add_parser("faces", help="f-vector of one crown order polytope")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--oracle", action="store_true")
    f.set_defaults(func=cmd_faces)

    h = sub.add_parser("hstar", help="h*-vector and gamma-vector of one crown")
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--method", choices=["cswap", "descents", "ehrhart", "all"], default="all")
    h.set_defaults(func=cmd_hstar)

    o = sub.add_parser("omega", help="order and Ehrhart polynomial of a poset")
    which = o.add_mutually_exclusive_group(required=True)
    which.add_argument("--crown", type=int, metavar="2N")
    which.add_argument("--zigzag", type=int, metavar="N")
    which.add_argument("--poset", metavar="JSON|@FILE")
    o.set_defaults(func=cmd_omega)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.budget is not None and args.budget <= 0:
            raise UsageError("--budget must be positive")
        budget = Budget(args.budget if args.budget is not None else default_budget())
        return args.func(args, budget)
    except (UsageError, DomainError) as exc:
        print(f"crownpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"crownpoly: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except MathError as exc:
        print(f"crownpoly: internal mathematical inconsistency: {exc}", file=sys.stderr)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
