"""Command-line interface: table, count, list, verify and fit subcommands.

Exit codes: 0 success, 1 argument error, 2 verification mismatch,
3 enumeration ceiling exceeded, 4 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import counts, tcodes
from .fit import fit_growth
from .tcodes import CEILING_ENV_VAR, ResourceLimitError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_RESOURCE = 3
EXIT_IO = 4

CSV_HEADER = "c,p1,p2,p3,p,total"


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; the contract here is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="pretzeltab",
                     description="Tabulate alternating oriented pretzel links by crossing number.")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit count rows for a crossing-number range")
    table.add_argument("--min", type=int, default=6, dest="min_c", metavar="N")
    table.add_argument("--max", type=int, default=50, dest="max_c", metavar="N")
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.add_argument("--out", metavar="PATH", help="output file (default: stdout)")

    count = sub.add_parser("count", help="print counts for one crossing number")
    count.add_argument("-c", type=int, required=True, metavar="N")
    count.add_argument("--type", choices=("1", "2", "3", "all"), default="all")

    lst = sub.add_parser("list", help="list canonical class representatives")
    lst.add_argument("-c", type=int, required=True, metavar="N")
    lst.add_argument("--type", choices=("1", "2", "3"), required=True)
    lst.add_argument("--format", choices=("lines", "json"), default="lines")
    lst.add_argument("--ceiling", type=int, metavar="N",
                     help="override the exhaustive-enumeration ceiling")

    verify = sub.add_parser("verify", help="check closed-form counts against exhaustive enumeration")
    verify.add_argument("--max", type=int, default=16, dest="max_c", metavar="N")
    verify.add_argument("--ceiling", type=int, metavar="N",
                        help="override the exhaustive-enumeration ceiling")

    fit = sub.add_parser("fit", help="least-squares exponential growth fit of the counts")
    fit.add_argument("--min", type=int, default=6, dest="min_c", metavar="N")
    fit.add_argument("--max", type=int, default=50, dest="max_c", metavar="N")

    return parser


def _csv_lines(rows) -> list[str]:
    lines = [CSV_HEADER]
    lines.extend(f"{r.c},{r.p1},{r.p2},{r.p3},{r.p},{r.total}" for r in rows)
    return lines


def _json_text(rows) -> str:
    payload = [
        {"c": r.c, "p1": str(r.p1), "p2": str(r.p2), "p3": str(r.p3),
         "p": str(r.p), "total": str(r.total)}
        for r in rows
    ]
    return json.dumps(payload, indent=2)


def _cmd_table(args) -> int:
    if not 1 <= args.min_c <= args.max_c:
        print(f"pretzeltab table: need 1 <= min <= max, got {args.min_c}..{args.max_c}",
              file=sys.stderr)
        return EXIT_USAGE
    rows = [counts.count_row(c) for c in range(args.min_c, args.max_c + 1)]
    if args.format == "csv":
        text = "\n".join(_csv_lines(rows)) + "\n"
    else:
        text = _json_text(rows) + "\n"
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"pretzeltab table: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_count(args) -> int:
    if args.c < 1:
        print(f"pretzeltab count: crossing number must be positive, got {args.c}",
              file=sys.stderr)
        return EXIT_USAGE
    if args.type == "all":
        values = [counts.count_by_type(args.c, t) for t in (1, 2, 3)]
        print(" ".join(str(v) for v in values))
    else:
        print(counts.count_by_type(args.c, int(args.type)))
    return EXIT_OK


def _ceiling_hint(exc: ResourceLimitError) -> str:
    return f"{exc} (raise it with --ceiling or {CEILING_ENV_VAR})"


def _cmd_list(args) -> int:
    if args.c < 1:
        print(f"pretzeltab list: crossing number must be positive, got {args.c}",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        classes = tcodes.enumerate_classes(args.c, int(args.type), ceiling=args.ceiling)
    except ResourceLimitError as exc:
        print(f"pretzeltab list: {_ceiling_hint(exc)}", file=sys.stderr)
        return EXIT_RESOURCE
    if args.format == "lines":
        for code in classes:
            print(code)
    else:
        print(json.dumps([str(code) for code in classes], indent=2))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.max_c < 1:
        print(f"pretzeltab verify: --max must be positive, got {args.max_c}",
              file=sys.stderr)
        return EXIT_USAGE
    ceiling = args.ceiling if args.ceiling is not None else tcodes.enum_ceiling()
    if args.max_c > ceiling:
        exc = ResourceLimitError(
            f"verify up to {args.max_c} crossings exceeds the ceiling of {ceiling}")
        print(f"pretzeltab verify: {_ceiling_hint(exc)}", file=sys.stderr)
        return EXIT_RESOURCE
    failures = 0
    checks = 0
    print("   c  type     formula  enumerated  result")
    for c in range(1, args.max_c + 1):
        for link_type in (1, 2, 3):
            formula = counts.count_by_type(c, link_type)
            enumerated = len(tcodes.enumerate_classes(c, link_type, ceiling=ceiling))
            ok = formula == enumerated
            checks += 1
            failures += 0 if ok else 1
            print(f"{c:4d}  {link_type:4d}  {formula:10d}  {enumerated:10d}  "
                  f"{'PASS' if ok else 'FAIL'}")
    print(f"verify: {checks - failures}/{checks} checks passed")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def _cmd_fit(args) -> int:
    try:
        result = fit_growth(args.min_c, args.max_c)
    except ValueError as exc:
        print(f"pretzeltab fit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print("model: p(c) ~ a * exp(b * c)")
    print(f"range: c = {result.c_min}..{result.c_max} ({result.n_points} points)")
    print(f"a  = {result.a:.6g}")
    print(f"b  = {result.b:.6g}")
    print(f"r2 = {result.r2:.6g}")
    print(f"2a = {2 * result.a:.6g}  (doubled-total prefactor)")
    return EXIT_OK


_COMMANDS = {
    "table": _cmd_table,
    "count": _cmd_count,
    "list": _cmd_list,
    "verify": _cmd_verify,
    "fit": _cmd_fit,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"pretzeltab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
