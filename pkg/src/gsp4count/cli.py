"""Command-line front end: ``gsp4count <subcommand> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 a single
requested value is unknown.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .arith import is_prime
from .checks import golden_cells, load_golden_tables, run_checks, SUITES
from .counts import count, series_counts
from .gfcatalog import gf_catalog
from .plancherel import plancherel_mass, verify_mass_system
from .reprtypes import ReprType, ZeroType, parse_type
from .siegel import SubgroupKind, dim_newforms, dim_siegel_cusp

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3

RECORD_FIELDS = ("k", "p", "type", "value", "route")
DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)


class UsageError(Exception):
    pass


def _record(k, p, label, value, route) -> dict:
    return {
        "k": k,
        "p": p,
        "type": str(label),
        "value": "unknown" if value is None else value,
        "route": "none" if route is None else str(route),
    }


def _count_record(res) -> dict:
    return _record(res.k, res.p, res.omega, res.value, res.route)


# -- rendering --------------------------------------------------------------


def _render_csv(rows: list[dict], fields) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _render_json(rows: list[dict], fields) -> str:
    ordered = [{f: row[f] for f in fields} for row in rows]
    return json.dumps(ordered, separators=(",", ":"), default=str) + "\n"


def _md_table(header: list, body: list[list]) -> list[str]:
    lines = ["| " + " | ".join(map(str, header)) + " |"]
    lines.append("|" + "|".join("---" for _ in header) + "|")
    lines.extend("| " + " | ".join(map(str, r)) + " |" for r in body)
    return lines


def _render_md_grid(rows: list[dict]) -> str:
    """One table per type: primes down, weights across."""
    out: list[str] = []
    labels = list(dict.fromkeys(r["type"] for r in rows))
    for label in labels:
        sub = [r for r in rows if r["type"] == label]
        ks = sorted({r["k"] for r in sub})
        ps = sorted({r["p"] for r in sub})
        cell = {(r["p"], r["k"]): r["value"] for r in sub}
        if out:
            out.append("")
        out.append(f"### {label}")
        out.append("")
        body = [[p] + [cell.get((p, k), "") for k in ks] for p in ps]
        out.extend(_md_table(["p \\ k"] + ks, body))
    return "\n".join(out) + "\n"


def _render(rows: list[dict], fields, fmt: str, grid: bool = False) -> str:
    if fmt == "csv":
        return _render_csv(rows, fields)
    if fmt == "json":
        return _render_json(rows, fields)
    if grid:
        return _render_md_grid(rows)
    return "\n".join(_md_table(list(fields), [[r[f] for f in fields] for r in rows])) + "\n"


# -- argument helpers -------------------------------------------------------


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _prime_list(text: str) -> list[int]:
    return sorted({_prime(t) for t in text.split(",") if t.strip()})


def _rtype(text: str):
    try:
        return parse_type(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _nonnegative(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
    return n


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "md"), default="csv")
    common.add_argument("--out", metavar="FILE", help="write to FILE instead of stdout")

    parser = _Parser(prog="gsp4count", description="Counts of level-p cuspidal representations of GSp(4).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", parents=[common], help="a single s_k(p, type)")
    c.add_argument("--p", type=_prime, required=True)
    c.add_argument("--k", type=_positive, required=True)
    c.add_argument("--type", type=_rtype, required=True)

    t = sub.add_parser("table", parents=[common], help="a table of counts")
    t.add_argument("--type", type=_rtype)
    t.add_argument("--primes", type=_prime_list, default=list(DEFAULT_PRIMES))
    t.add_argument("--kmin", type=_positive, default=1)
    t.add_argument("--kmax", type=_positive, default=20)
    t.add_argument("--suite", choices=("appendix-b",))

    for name, what in (("dims", "cusp form dimensions"), ("newforms", "newform dimensions")):
        d = sub.add_parser(name, parents=[common], help=f"Siegel {what} for k = 1..kmax")
        d.add_argument("--group", choices=[g.value for g in SubgroupKind], required=True)
        d.add_argument("--p", type=_prime, required=True)
        d.add_argument("--kmax", type=_positive, required=True)

    pl = sub.add_parser("plancherel", parents=[common], help="Plancherel masses at q")
    pl.add_argument("--q", type=int, required=True)

    s = sub.add_parser("series", parents=[common], help="generating-series coefficients")
    s.add_argument("--p", type=_prime, required=True)
    s.add_argument("--type", type=_rtype, required=True)
    s.add_argument("--upto", type=_nonnegative, required=True)
    s.add_argument("--gf", action="store_true", help="print the rational function instead")

    ch = sub.add_parser("check", parents=[common], help="run a consistency suite")
    ch.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    return parser


# -- subcommands ------------------------------------------------------------


def _cmd_count(args) -> tuple[str, int]:
    res = count(args.k, args.p, args.type)
    rows = [_count_record(res)]
    if args.format == "json":
        # a scalar query prints one object rather than a one-element array
        text = _render_json(rows, RECORD_FIELDS)[1:-2] + "\n"
    else:
        text = _render(rows, RECORD_FIELDS, args.format, grid=True)
    return text, EXIT_OK if res.known else EXIT_UNKNOWN


def _cmd_table(args) -> tuple[str, int]:
    if args.suite == "appendix-b":
        available = list(load_golden_tables())
        types = None
        if args.type is not None:
            if str(args.type) not in available:
                raise UsageError(f"no golden table for {args.type}; have {', '.join(available)}")
            types = {str(args.type)}
        rows = [_count_record(count(k, p, label)) for label, k, p, _ in golden_cells(types)]
    else:
        if args.type is None:
            raise UsageError("table needs --type or --suite appendix-b")
        if args.kmin > args.kmax:
            raise UsageError("--kmin must not exceed --kmax")
        rows = [
            _count_record(count(k, p, args.type))
            for p in args.primes
            for k in range(args.kmin, args.kmax + 1)
        ]
    return _render(rows, RECORD_FIELDS, args.format, grid=True), EXIT_OK


def _cmd_dims(args, fn) -> tuple[str, int]:
    H = SubgroupKind(args.group)
    if fn is dim_newforms and H is SubgroupKind.FULL:
        raise UsageError("newforms are not defined for the full group")
    rows = []
    for k in range(1, args.kmax + 1):
        value = fn(k, args.p, H)
        rows.append(_record(k, args.p, H.value, value, None if value is None else "derived"))
    return _render(rows, RECORD_FIELDS, args.format, grid=True), EXIT_OK


def _cmd_plancherel(args) -> tuple[str, int]:
    if args.q < 2:
        raise UsageError(f"--q must be >= 2, got {args.q}")
    fields = ("q", "type", "value")
    rows = [
        {"q": args.q, "type": key, "value": str(plancherel_mass(args.q, key))}
        for key in ("I", "II", "III", "IV", "V", "VI")
    ]
    ok = verify_mass_system(args.q)
    rows.append({"q": args.q, "type": "system", "value": "ok" if ok else "failed"})
    return _render(rows, fields, args.format), EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_series(args) -> tuple[str, int]:
    omega = args.type
    if isinstance(omega, ZeroType):
        raise UsageError(f"{omega} has no generating function")
    if args.gf:
        return gf_catalog(args.p, ReprType(omega)).to_text() + "\n", EXIT_OK
    coeffs = series_counts(args.p, omega, args.upto)
    rows = [_record(k, args.p, omega, c, "series") for k, c in enumerate(coeffs)]
    return _render(rows, RECORD_FIELDS, args.format, grid=True), EXIT_OK


def _cmd_check(args) -> tuple[str, int]:
    reports = run_checks(args.suite)
    fields = ("suite", "cases", "failures", "detail")
    rows = []
    for r in reports:
        rows.append({"suite": r.suite, "cases": r.cases, "failures": len(r.failures), "detail": ""})
        for f in r.failures:
            rows.append({"suite": r.suite, "cases": "", "failures": "", "detail": str(f)})
    failed = any(not r.ok for r in reports)
    return _render(rows, fields, args.format), EXIT_CHECK_FAILED if failed else EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "count": _cmd_count,
            "table": _cmd_table,
            "dims": lambda a: _cmd_dims(a, dim_siegel_cusp),
            "newforms": lambda a: _cmd_dims(a, dim_newforms),
            "plancherel": _cmd_plancherel,
            "series": _cmd_series,
            "check": _cmd_check,
        }[args.command]
        text, code = handler(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ValueError as exc:
        print(f"gsp4count: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
