"""The ``dqg`` command: run verification suites, print normal forms and pairings.

Exit codes: 0 all checks pass, 1 a check fails (or an expression cannot be
simplified within the det-clearing cap), 2 usage or parse errors.
"""

import argparse
import json
import sys

from . import suites
from .nfcore import Algebra, format_element, simplify_mod_det
from .pairing import pair
from .parser import ParseError, parse_expr
from .report import SuiteReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _n_arg(text):
    n = int(text)
    if not suites.MIN_N <= n <= suites.MAX_N:
        raise argparse.ArgumentTypeError(
            f"n must be between {suites.MIN_N} and {suites.MAX_N}")
    return n


def _nonneg(text):
    k = int(text)
    if k < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return k


def build_parser():
    p = argparse.ArgumentParser(prog="dqg", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_n_arg, default=2, help="size of the algebra (2..4)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--clear-det", type=_nonneg, default=None, dest="clear_det",
                        help="largest det power allowed when clearing det^-1 (default: auto)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="run verification suites")
    c.add_argument("name", nargs="?", default=None,
                   help="suite name, or 'all' (default: all, or the --suite list)")
    c.add_argument("--suite", default=None,
                   help="comma-separated suite names to run")
    c.add_argument("--seed", type=int, default=0, help="seed for random word tests")
    c.add_argument("--r", type=int, default=4,
                   help=f"largest r for the hall-littlewood suite (1..{suites.MAX_HL})")

    nf = sub.add_parser("nf", parents=[common], help="print the normal form of an expression")
    nf.add_argument("expr")

    pr = sub.add_parser("pair", parents=[common], help="pair two expressions")
    pr.add_argument("left")
    pr.add_argument("right")
    return p


def selected_suites(name, suite_filter):
    names = []
    if suite_filter:
        names = [s.strip() for s in suite_filter.split(",") if s.strip()]
    if name and name != "all":
        if names and name not in names:
            raise UsageError(f"suite {name!r} is excluded by --suite {suite_filter!r}")
        names = [name]
    names = names or list(suites.SUITES)
    unknown = [s for s in names if s not in suites.SUITES]
    if unknown:
        raise UsageError(f"unknown suite: {', '.join(unknown)} "
                         f"(choose from {', '.join(suites.SUITE_NAMES)})")
    return names


def merge_reports(reports, name, n):
    """One report over several suites; ids are prefixed by the suite name."""
    if len(reports) == 1:
        return reports[0]
    checks = []
    for rep in reports:
        for c in rep.checks:
            c.id = f"{rep.suite}: {c.id}"
            checks.append(c)
    return SuiteReport(name, n, checks).sorted()


def cmd_check(args, out):
    names = selected_suites(args.name, args.suite)
    if not 1 <= args.r <= suites.MAX_HL:
        raise UsageError(f"--r must be between 1 and {suites.MAX_HL}")
    alg = Algebra(args.n)
    reports = [suites.run_suite(s, alg=alg, seed=args.seed, clear_cap=args.clear_det, r=args.r)
               for s in names]
    label = names[0] if len(names) == 1 else (args.name or "all")
    report = merge_reports(reports, label, args.n)
    if args.format == "json":
        out.write(report.dumps() + "\n")
    else:
        out.write(report.to_text() + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def _simplified(alg, text, cap):
    x = parse_expr(alg, text)
    return simplify_mod_det(x, cap)


def cmd_nf(args, out):
    alg = Algebra(args.n)
    x, power = _simplified(alg, args.expr, args.clear_det)
    text = format_element(x)
    if args.format == "json":
        out.write(json.dumps({"n": args.n, "input": args.expr, "normal_form": text,
                              "clear_power": power}) + "\n")
    else:
        out.write(text + "\n")
    return EXIT_OK


def cmd_pair(args, out):
    alg = Algebra(args.n)
    left, _ = _simplified(alg, args.left, args.clear_det)
    right, _ = _simplified(alg, args.right, args.clear_det)
    value = pair(left, right)
    if args.format == "json":
        terms = [{"shift": list(a), "coeff": str(f)} for a, f in sorted(value.terms.items())]
        out.write(json.dumps({"n": args.n, "left": args.left, "right": args.right,
                              "value": str(value), "terms": terms}) + "\n")
    else:
        out.write(str(value) + "\n")
    return EXIT_OK


COMMANDS = {"check": cmd_check, "nf": cmd_nf, "pair": cmd_pair}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ParseError) as exc:
        print(f"dqg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"dqg: {exc}", file=sys.stderr)
        return EXIT_FAIL


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
