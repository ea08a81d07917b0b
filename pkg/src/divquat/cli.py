"""``divquat`` command-line front end.

Exit codes: 0 success, 1 verification or contract failure, 2 usage or parse
error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Iterable, Optional, TextIO

from . import bench, verify
from .densematrix import dump
from .errors import DivisorZero, NonFiniteInput, ParseError, UnknownMatrixName
from .factorization import MATRIX_NAMES, NUMERIC_MATRIX_NAMES, named_matrix
from .kernel import divide_fast
from .quaternion import Quaternion, divide_schoolbook
from .scalars import format_scalar, rational_parse

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _format_q(q: Quaternion) -> str:
    return " ".join(format_scalar(c) for c in q)


def _parse_float(tok: str) -> float:
    try:
        return float(tok)
    except ValueError:
        raise ParseError(f"not a number: {tok!r}") from None


def _parse_line(line: str, exact: bool) -> tuple[Quaternion, Quaternion]:
    toks = line.split()
    if len(toks) != 8:
        raise ParseError(f"expected 8 scalars, got {len(toks)}")
    conv = rational_parse if exact else _parse_float
    vals = [conv(t) for t in toks]
    return Quaternion(*vals[:4]), Quaternion(*vals[4:])


def _quotients_match(a: Quaternion, b: Quaternion, q: Quaternion, r: Quaternion,
                     exact: bool) -> bool:
    if exact:
        return a == b
    err = verify.rel_error(a, b, verify.component_scales(q, r))
    return err <= verify.FLOAT_TOLERANCE


def cmd_divide(lines: Iterable[str], mode: str, exact: bool,
               out: TextIO, err: TextIO) -> int:
    status = EXIT_OK
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            q, r = _parse_line(line, exact)
        except ParseError as exc:
            print(f"line {lineno}: {exc}", file=err)
            print("ERROR parse", file=out)
            status = EXIT_USAGE
            continue
        try:
            if mode == "both":
                fast = divide_fast(q, r)
                school = divide_schoolbook(q, r)
                print(f"fast {_format_q(fast)}", file=out)
                print(f"schoolbook {_format_q(school)}", file=out)
                if _quotients_match(fast, school, q, r, exact):
                    print("match", file=out)
                else:
                    print("MISMATCH", file=out)
                    if status == EXIT_OK:
                        status = EXIT_FAIL
            else:
                fn = divide_fast if mode == "fast" else divide_schoolbook
                print(_format_q(fn(q, r)), file=out)
        except DivisorZero:
            print("ERROR divisor-zero", file=out)
            status = EXIT_USAGE
        except NonFiniteInput:
            print("ERROR non-finite-input", file=out)
            status = EXIT_USAGE
    return status


def cmd_verify(n: int, seed: int, exact: bool, exhaustive: bool, out: TextIO) -> int:
    if exhaustive:
        report = verify.verify_exact(verify.exhaustive_pairs())
    elif exact:
        report = verify.verify_exact(verify.random_rational_pairs(n, seed))
    else:
        report = verify.verify_float(verify.random_float_pairs(n, seed))
    print(report.render(), file=out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_count(out: TextIO, err: TextIO) -> int:
    counts = verify.measure_counts()
    fields = verify.CONTRACT_FIELDS
    width = max(len(p) for p in counts)
    print(f"{'path':<{width}}  " + "  ".join(f"{f:>6}" for f in fields), file=out)
    for path, c in counts.items():
        print(f"{path:<{width}}  " + "  ".join(f"{getattr(c, f):>6}" for f in fields),
              file=out)
    bad = verify.contract_violations(counts)
    for row in bad:
        print(f"ContractViolation: {row}", file=err)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_bench(n: int, warmup: int, seed: int, out: TextIO) -> int:
    out.write(bench.to_csv(bench.run_bench(n, warmup, seed)))
    return EXIT_OK


def cmd_dump_matrices(which: str, q: Optional[Quaternion], out: TextIO, err: TextIO) -> int:
    if which == "all":
        names = [n for n in MATRIX_NAMES if q is not None or n not in NUMERIC_MATRIX_NAMES]
        blocks = [f"# {name}\n{dump(named_matrix(name, q))}" for name in names]
        print("\n\n".join(blocks), file=out)
        return EXIT_OK
    if which in NUMERIC_MATRIX_NAMES and q is None:
        print(f"matrix {which} needs a dividend: --q Q0 Q1 Q2 Q3", file=err)
        return EXIT_USAGE
    try:
        print(dump(named_matrix(which, q)), file=out)
    except UnknownMatrixName:
        print(f"unknown matrix name {which!r}; choose from: all, "
              + ", ".join(MATRIX_NAMES), file=err)
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divquat",
        description="Quaternion division with 8 real multiplications: "
                    "divide, verify, count, bench, dump-matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("divide", help="divide quaternion pairs read line by line")
    p.add_argument("--mode", choices=("fast", "schoolbook", "both"), default="fast")
    p.add_argument("--exact", action="store_true", help="exact rational arithmetic")
    p.add_argument("--file", help="read input from this file instead of stdin")

    p = sub.add_parser("verify", help="compare the fast path against the schoolbook oracle")
    p.add_argument("--n", type=_positive_int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--exhaustive", action="store_true",
                   help="all pairs with components in {-1, 0, 1}, exact")

    sub.add_parser("count", help="print operation counts and check the contracts")

    p = sub.add_parser("bench", help="time both paths, CSV output")
    p.add_argument("--n", type=_positive_int, default=100000)
    p.add_argument("--warmup", type=_nonneg_int, default=1000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("dump-matrices", help="print factor matrices")
    p.add_argument("--which", default="all")
    p.add_argument("--q", nargs=4, metavar=("Q0", "Q1", "Q2", "Q3"),
                   help="dividend for the Q-family matrices")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out, err = sys.stdout, sys.stderr

    if args.command == "divide":
        if args.file:
            try:
                with open(args.file) as fh:
                    return cmd_divide(fh, args.mode, args.exact, out, err)
            except OSError as exc:
                print(f"cannot read {args.file}: {exc}", file=err)
                return EXIT_USAGE
        return cmd_divide(sys.stdin, args.mode, args.exact, out, err)
    if args.command == "verify":
        return cmd_verify(args.n, args.seed, args.exact, args.exhaustive, out)
    if args.command == "count":
        return cmd_count(out, err)
    if args.command == "bench":
        return cmd_bench(args.n, args.warmup, args.seed, out)
    if args.command == "dump-matrices":
        q = None
        if args.q is not None:
            try:
                q = Quaternion.of(args.q, rational_parse)
            except ParseError as exc:
                print(f"--q: {exc}", file=err)
                return EXIT_USAGE
        return cmd_dump_matrices(args.which, q, out, err)
    return EXIT_USAGE  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
