"""Command-line front end.

Exit codes: 0 on success, 1 on invalid input, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from . import bench, covers, enumeration, transform
from .core import border_array
from .formats import FormatError, format_array, read_arrays, read_text
from .sima import InvalidCoverArray, infer
from .validate import validate


class UsageError(Exception):
    pass


def _open(path: str):
    if path == "-":
        return sys.stdin
    return open(path, encoding="ascii")


def _load_text(path: str) -> str:
    with _open(path) as f:
        return read_text(f)


def _load_arrays(path: str) -> list[list[int]]:
    with _open(path) as f:
        return read_arrays(f)


def cmd_border(args) -> int:
    print(format_array(border_array(_load_text(args.file))))
    return 0


def cmd_cover(args) -> int:
    x = _load_text(args.file)
    if args.max_oracle:
        c = covers.maximal_cover_array_oracle(x)
    elif args.oracle:
        c = covers.minimal_cover_array_oracle(x)
    else:
        c = covers.minimal_cover_array(x)
    print(format_array(c))
    return 0


def _map_arrays(fn: Callable) -> Callable:
    def run(args) -> int:
        for c in _load_arrays(args.file):
            print(fn(c))
        return 0
    return run


def _infer_line(c: list[int]) -> str:
    return infer(c).text


def cmd_validate(args) -> int:
    status = 0
    for c in _load_arrays(args.file):
        report = validate(c)
        print(report.line())
        if not report.valid:
            status = 1
    return status


def cmd_enumerate(args) -> int:
    try:
        arrays = enumeration.distinct_cover_arrays(args.n, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.count:
        print(len(arrays))
    else:
        for c in arrays:
            print(format_array(c))
    return 0


def cmd_bench(args) -> int:
    try:
        if args.random is not None:
            records = [bench.bench_random(args.random, args.seed)]
        else:
            records = bench.bench_run(args.fib_min, args.fib_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.csv:
        with open(args.csv, "w", encoding="ascii", newline="") as f:
            bench.write_csv(records, f)
    else:
        bench.write_csv(records, sys.stdout)
    for r in records:
        if r.alphabet > 2:
            print(f"error: {r.label} inferred over {r.alphabet} letters", file=sys.stderr)
            return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverinfer",
        description="Border and cover arrays, and binary string inference from cover arrays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("border", help="border array of a string file")
    p.add_argument("file")
    p.set_defaults(func=cmd_border)

    p = sub.add_parser("cover", help="minimal cover array of a string file")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--oracle", action="store_true", help="use the brute-force minimal oracle")
    group.add_argument("--max-oracle", action="store_true", help="brute-force maximal cover array")
    p.set_defaults(func=cmd_cover)

    for name, fn, text in (
        ("maxtomin", lambda c: format_array(transform.max_to_min(c)), "maximal to minimal cover array"),
        ("prune", lambda c: format_array(transform.prune(c)), "prune a minimal cover array"),
        ("infer", _infer_line, "infer a binary string from each array"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.set_defaults(func=_map_arrays(fn))

    p = sub.add_parser("validate", help="check each array is a minimal cover array")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("enumerate", help="distinct minimal cover arrays of length n")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?", default=2, help="alphabet size (default 2)")
    p.add_argument("--count", action="store_true", help="print only the number of arrays")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bench", help="time inference on Fibonacci or random words")
    p.add_argument("--fib-min", type=int, default=4)
    p.add_argument("--fib-max", type=int, default=25)
    p.add_argument("--random", type=int, metavar="N", help="one random binary string of length N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", metavar="PATH", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"coverinfer: {exc}", file=sys.stderr)
        return 2
    except InvalidCoverArray as exc:
        print(f"coverinfer: invalid cover array: {exc}", file=sys.stderr)
        return 1
    except (FormatError, OSError, UnicodeDecodeError) as exc:
        print(f"coverinfer: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
