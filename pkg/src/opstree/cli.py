"""Command-line front end.

Sequence files hold one sequence per line, integers separated by
whitespace and/or commas. Blank lines and lines starting with ``#`` are
skipped. ``-`` reads standard input.

Exit status: 0 on success or a match, 1 when the answer is negative,
2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from typing import Optional, Sequence

from . import serialize
from .codes import code, shape
from .squares import all_op_squares, square_length_index
from .tree import build_tree

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1
_SPLIT = re.compile(r"[\s,]+")


class InputError(Exception):
    pass


def parse_sequences(lines, name: str = "<input>") -> list[list[int]]:
    out = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        seq = []
        for tok in _SPLIT.split(stripped):
            if not tok:
                continue
            try:
                v = int(tok)
            except ValueError:
                raise InputError(f"{name}:{lineno}: not an integer: {tok!r}") from None
            if not INT64_MIN <= v <= INT64_MAX:
                raise InputError(f"{name}:{lineno}: value out of 64-bit range: {tok}")
            seq.append(v)
        if seq:
            out.append(seq)
    return out


def read_sequences(path: str) -> list[list[int]]:
    if path == "-":
        return parse_sequences(sys.stdin, "<stdin>")
    try:
        with open(path) as fh:
            return parse_sequences(fh, path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _one_text(path: str) -> list[int]:
    seqs = read_sequences(path)
    if len(seqs) != 1:
        raise InputError(f"{path}: expected exactly one text sequence, found {len(seqs)}")
    return seqs[0]


def _load_index(path: str):
    try:
        with open(path) as fh:
            return serialize.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError, IndexError) as exc:
        raise InputError(f"{path}: bad index: {exc}") from None


def cmd_code(args) -> int:
    seqs = read_sequences(args.input)
    if not seqs:
        raise InputError(f"{args.input}: no sequences")
    for seq in seqs:
        print(" ".join(str(c) for c in code(seq)))
        print(" ".join(map(str, shape(seq))))
    return 0


def cmd_match(args) -> int:
    tree = _load_index(args.text) if args.index else build_tree(_one_text(args.text))
    patterns = read_sequences(args.patterns)
    if not patterns:
        raise InputError(f"{args.patterns}: no patterns")
    results = [tree.occurrences(p) for p in patterns]
    if args.json:
        report = [{"pattern_index": k, "positions": pos} for k, pos in enumerate(results, start=1)]
        print(json.dumps(report))
    else:
        for pos in results:
            print(" ".join(map(str, pos)))
    return 0 if any(results) else 1


def cmd_squares(args) -> int:
    tree = build_tree(_one_text(args.text))
    if args.length is not None:
        found = square_length_index(tree).has_length(args.length)
        print("yes" if found else "no")
        return 0 if found else 1
    squares = all_op_squares(tree)
    for sq in squares:
        print(sq.start, sq.length)
    return 0 if squares else 1


def cmd_stats(args) -> int:
    text = _one_text(args.text)
    t0 = time.perf_counter()
    tree = build_tree(text)
    elapsed = time.perf_counter() - t0
    print(f"n={tree.n} nodes={tree.internal_count} leaves={tree.n} "
          f"max_depth={tree.max_internal_depth()} build_time={elapsed:.3f}s")
    return 0


def cmd_index(args) -> int:
    tree = build_tree(_one_text(args.text))
    if args.output == "-":
        serialize.dump(tree, sys.stdout)
    else:
        with open(args.output, "w") as fh:
            serialize.dump(tree, fh)
    return 0


def _even_length(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {raw!r}") from None
    if value < 2 or value % 2:
        raise argparse.ArgumentTypeError("square length must be even and at least 2")
    return value


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opst", description="Order-preserving suffix trees over integer sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("code", help="print code and shape of each sequence")
    p.add_argument("input", help="sequence file, or - for stdin")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("match", help="report order-preserving occurrences of patterns")
    p.add_argument("text", help="file with one text sequence (or an index with --index)")
    p.add_argument("patterns", help="file with one pattern per line")
    p.add_argument("--index", action="store_true", help="TEXT is an index written by 'opst index'")
    p.add_argument("--json", action="store_true", help="emit a JSON array")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("squares", help="query order-preserving squares")
    p.add_argument("text", help="file with one text sequence")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--length", type=_even_length, metavar="2K",
                      help="answer yes/no: is there a square of this total length")
    mode.add_argument("--all", action="store_true", help="list every square as 'start length'")
    p.set_defaults(func=cmd_squares)

    p = sub.add_parser("stats", help="print index statistics")
    p.add_argument("text", help="file with one text sequence")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("index", help="build an index and write it as JSON")
    p.add_argument("text", help="file with one text sequence")
    p.add_argument("-o", "--output", default="-", help="output path (default: stdout)")
    p.set_defaults(func=cmd_index)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"opst: error: {exc}", file=sys.stderr)
        return 2
