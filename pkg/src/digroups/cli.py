"""Command-line interface.

Exit codes: 0 pass, 1 mathematical failure, 2 input error, 3 resource bound.
"""

from __future__ import annotations

import argparse
import random
import sys

from .compare import oracle_compare
from .digroup import check_axioms, decompose, group_part, halo
from .errors import BoundExceededError, InvalidDigroupError, MalformedInputError
from .fileformat import format_decomposition, load_digroup
from .free_product import FactorPair, fp_eval_word
from .oracle import DEFAULT_SLACK

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3
MAX_LEN_CAP = 8
WORD_CAP = 2_000_000


def _valid(path, out):
    D = load_digroup(path)
    report = check_axioms(D)
    if not report.ok:
        print("invalid digroup", file=out)
        for line in report.lines(D.format_element):
            print(line, file=out)
        raise InvalidDigroupError(str(path))
    return D


def cmd_validate(args, out):
    D = load_digroup(args.path)
    report = check_axioms(D)
    if report.ok:
        print("pass", file=out)
        return EXIT_OK
    print("fail", file=out)
    for line in report.lines(D.format_element):
        print(line, file=out)
    return EXIT_FAIL


def cmd_parts(args, out):
    D = _valid(args.path, out)
    print("J: " + " ".join(D.format_element(a) for a in group_part(D)), file=out)
    print("E: " + " ".join(D.format_element(a) for a in halo(D)), file=out)
    return EXIT_OK


def cmd_decompose(args, out):
    D = _valid(args.path, out)
    dec = decompose(D)
    out.write(format_decomposition(D, dec))
    print("isomorphism: verified", file=out)
    return EXIT_OK


def cmd_freeprod_eval(args, out):
    ctx = FactorPair(_valid(args.path_a, out), _valid(args.path_b, out))
    print(ctx.format_element(fp_eval_word(args.expr, ctx)), file=out)
    return EXIT_OK


def cmd_oracle_compare(args, out):
    if args.max_len > MAX_LEN_CAP:
        print(f"bound exceeded: max-len {args.max_len} is above the cap {MAX_LEN_CAP}", file=out)
        return EXIT_BOUND
    A, B = _valid(args.path_a, out), _valid(args.path_b, out)
    report = oracle_compare(A, B, args.max_len, args.slack, WORD_CAP)
    for line in report.lines():
        print(line, file=out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_selftest(args, out):
    from .selftest import run_selftest

    results = run_selftest(random.Random(args.seed))
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}", file=out)
    return EXIT_OK if all(ok for _, ok in results) else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(prog="digroups", description="Digroups and their free products.")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the digroup axioms of a table file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("parts", help="print the group part J and the halo E")
    p.add_argument("path")
    p.set_defaults(func=cmd_parts)

    p = sub.add_parser("decompose", help="print the E x J decomposition and verify it")
    p.add_argument("path")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("freeprod-eval", help="normalize a pointed word in the free product A * B")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("expr", help='pointed word such as "[1.t 2.b @ 1]"')
    p.set_defaults(func=cmd_freeprod_eval)

    p = sub.add_parser("oracle-compare", help="compare normal forms against the congruence oracle")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--slack", type=int, default=DEFAULT_SLACK)
    p.set_defaults(func=cmd_oracle_compare)

    p = sub.add_parser("selftest", help="run built-in checks on the sample digroups")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvalidDigroupError as exc:
        print(f"error: invalid digroup: {exc}", file=out)
        return EXIT_FAIL
    except BoundExceededError as exc:
        print(f"bound exceeded: {exc}", file=out)
        for k, v in exc.stats.items():
            print(f"{k}: {v}", file=out)
        return EXIT_BOUND
    except MalformedInputError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
