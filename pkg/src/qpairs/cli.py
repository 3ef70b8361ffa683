"""Command-line front end: tables of sT(n) and C(m, n), pair listings, identity checks.

Data goes to stdout.  Diagnostics, including the seed used for randomized
specializations, go to stderr.  Exit status is 0 on success, 1 when an
identity fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .identities import DEFAULT_SEED, OrderTooSmall, get_check, list_checks, verify
from .partitions import (
    ENUMERATION_CEILING,
    CrankTable,
    enumerate_st_pairs,
    paircrank,
    st_series,
    st_series_z_crankform,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--order", type=_nonneg)
    common.add_argument("--max-n", type=_nonneg)
    common.add_argument("--modulus", type=int)
    common.add_argument("--identity")
    common.add_argument("--seed", type=int)

    parser = _Parser(prog="qpairs", description="sT(n) tables, paircrank counts and identity checks.")
    parser.add_argument("--list", action="store_true", help="print the identity registry and exit")
    parser.add_argument("--format", choices=("text", "json", "csv"), default=None, dest="top_format")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.add_parser("st-table", parents=[common], help="sT(n) for 1 <= n <= max-n")
    sub.add_parser("crank-table", parents=[common], help="C(m, n), or counts by residue with --modulus")
    sub.add_parser("verify", parents=[common], help="check one identity")
    sub.add_parser("verify-all", parents=[common], help="check every registered identity")
    sub.add_parser("enumerate", parents=[common], help="list the ST pairs of every n <= max-n")
    return parser


# -- output helpers ----------------------------------------------------------


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _table(fmt, header, rows, text_rows=None) -> str:
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "json":
        return _json([dict(zip(header, r)) for r in rows])
    lines = ["  ".join(header)]
    lines += text_rows if text_rows is not None else ["  ".join(map(str, r)) for r in rows]
    return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------


def cmd_list(fmt) -> tuple[int, str]:
    descs = [c.descriptor() for c in list_checks()]
    if fmt == "json":
        return EXIT_OK, _json(descs)
    if fmt == "csv":
        rows = [(d["name"], d["default_order"], d["ring"], d["randomized"]) for d in descs]
        return EXIT_OK, _csv(("name", "default_order", "ring", "randomized"), rows)
    lines = [f"{d['name']:<22} order {d['default_order']:<4} {d['ring']:<10} {d['description']}" for d in descs]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_st_table(args) -> tuple[int, str]:
    max_n = 20 if args.max_n is None else args.max_n
    rows = []
    if max_n:
        s = st_series(max_n)
        rows = [(n, s[n]) for n in range(1, max_n + 1)]
    return EXIT_OK, _table(args.format, ("n", "sT"), rows)


def cmd_crank_table(args) -> tuple[int, str]:
    max_n = 10 if args.max_n is None else args.max_n
    table = CrankTable.from_series(st_series_z_crankform(max(max_n, 1)), max_n)
    t = args.modulus
    if t is not None and t < 1:
        raise UsageError("--modulus must be a positive integer")
    rows = []
    for n in range(1, max_n + 1):
        col = table.column(n)
        if t is None:
            rows += [(n, m, c) for m, c in sorted(col.items())]
        else:
            classes = [0] * t
            for m, c in col.items():
                classes[m % t] += c
            rows += [(n, k, c) for k, c in enumerate(classes)]
    return EXIT_OK, _table(args.format, ("n", "m", "C"), rows)


def cmd_enumerate(args) -> tuple[int, str]:
    max_n = 5 if args.max_n is None else args.max_n
    if max_n > ENUMERATION_CEILING:
        raise UsageError(f"enumeration is limited to n <= {ENUMERATION_CEILING}")
    rows, text = [], []
    for n in range(1, max_n + 1):
        for p in enumerate_st_pairs(n):
            rows.append((n, str(p.pi1), str(p.pi2) if p.pi2.count else "", paircrank(p)))
            text.append(f"{n}  {p}  paircrank {paircrank(p)}")
    return EXIT_OK, _table(args.format, ("n", "pi1", "pi2", "paircrank"), rows, text)


def _report_seed(check_names, seed) -> None:
    if any(get_check(n).randomized for n in check_names):
        print(f"seed: {seed}", file=sys.stderr)


def cmd_verify(args) -> tuple[int, str]:
    if not args.identity:
        raise UsageError("verify needs --identity NAME (see --list)")
    try:
        get_check(args.identity)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    seed = DEFAULT_SEED if args.seed is None else args.seed
    _report_seed([args.identity], seed)
    try:
        report = verify(args.identity, args.order, seed=seed)
    except OrderTooSmall as exc:
        raise UsageError(str(exc)) from None
    status = EXIT_OK if report.passed else EXIT_FAIL
    if args.format == "json":
        return status, _json(report.to_dict())
    if args.format == "csv":
        return status, _csv(("name", "order", "passed", "first_bad_exponent"), [_csv_row(report)])
    lines = [report.summary()] + [f"  note: {n}" for n in report.notes]
    return status, "\n".join(lines) + "\n"


def _csv_row(r):
    return (r.name, r.order, str(r.passed).lower(), "" if r.first_bad_exponent is None else r.first_bad_exponent)


def cmd_verify_all(args) -> tuple[int, str]:
    seed = DEFAULT_SEED if args.seed is None else args.seed
    checks = list_checks()
    _report_seed([c.name for c in checks], seed)
    reports = []
    for c in checks:
        order = args.order if args.order is not None and args.order >= c.min_order else None
        reports.append(verify(c.name, order, seed=seed))
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    if args.format == "json":
        return status, _json([r.to_dict() for r in reports])
    if args.format == "csv":
        return status, _csv(("name", "order", "passed", "first_bad_exponent"), [_csv_row(r) for r in reports])
    lines = []
    for r in reports:
        lines.append(r.summary())
        lines += [f"  note: {n}" for n in r.notes]
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return status, "\n".join(lines) + "\n"


COMMANDS = {
    "st-table": cmd_st_table,
    "crank-table": cmd_crank_table,
    "verify": cmd_verify,
    "verify-all": cmd_verify_all,
    "enumerate": cmd_enumerate,
}


def run(argv=None, out=None, err=None) -> int:
    """Parse ``argv``, write the result to ``out`` and return the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    old_err, sys.stderr = sys.stderr, err
    try:
        try:
            args = build_parser().parse_args(argv)
            if args.list:
                fmt = args.top_format or getattr(args, "format", None) or "text"
                status, text = cmd_list(fmt)
            elif args.command is None:
                raise UsageError("qpairs: error: a command is required (or --list)")
            else:
                status, text = COMMANDS[args.command](args)
        except UsageError as exc:
            print(str(exc), file=err)
            return EXIT_USAGE
        except ValueError as exc:
            print(f"qpairs: error: {exc}", file=err)
            return EXIT_USAGE
        out.write(text)
        return status
    finally:
        sys.stderr = old_err


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
