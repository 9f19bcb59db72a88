"""Command-line front end: ``python -m cutshuffle <command> ...``."""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from .affine_shuffles import METHODS, affine2_sample, affine_measure
from .conjecture_lab import modular_reciprocity_count
from .exact_algebra import format_rational
from .perm_core import CapError
from .patience import TIE_RULES, patience_play
from .polyfactor import class_measure
from .shuffle_measures import (
    cut_measure, cut_then_shuffle_measure, gsr_sample, riffle_measure,
    shuffle_then_cut_measure, tv_riffle_table,
)
from .verification import SUITES, format_result, run_suite

__all__ = ["main", "build_parser"]

LAWS = ("riffle", "cut", "riffle-cut", "cut-riffle", "affine")


class VerificationFailure(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cutshuffle", description=__doc__)
    p.add_argument("--threads", type=_positive, default=1,
                   help="accepted for compatibility; computations run in one thread")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measure", help="exact measure on S_n as TSV")
    m.add_argument("--law", choices=LAWS, required=True)
    m.add_argument("--n", type=_positive, required=True)
    m.add_argument("--k", type=_positive, default=2)
    m.add_argument("--by-class", action="store_true", help="lump by cycle type")
    m.add_argument("--method", choices=METHODS, default="partitions", help="affine definition")
    m.add_argument("--no-crosscheck", action="store_true",
                   help="skip the Ramanujan-sum cross-check of affine measures")

    t = sub.add_parser("tv", help="total variation to uniform after m shuffles")
    t.add_argument("--n", type=_positive, required=True)
    t.add_argument("--k", type=_positive, default=2)
    t.add_argument("--max-shuffles", type=_nonneg, required=True)
    t.add_argument("--with-cut", action="store_true")

    v = sub.add_parser("verify", help="run an invariant suite")
    v.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    v.add_argument("--max-n", type=_positive, default=5)

    pt = sub.add_parser("patience", help="pile sizes for a deck")
    pt.add_argument("--word", required=True, help='space-separated cards, e.g. "7 5 1 3"')
    pt.add_argument("--ties", choices=TIE_RULES, default="forbidden")

    s = sub.add_parser("sample", help="random shuffles, one per line")
    s.add_argument("--law", choices=("gsr", "affine2"), required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--k", type=_positive, default=2)
    s.add_argument("--count", type=_nonneg, default=1)
    s.add_argument("--seed", type=int, required=True)

    r = sub.add_parser("reciprocity", help="multiset residue counts and their swap")
    r.add_argument("--m", type=int, required=True)
    r.add_argument("--x", type=_positive, required=True)
    r.add_argument("--y", type=_positive, required=True)
    return p


def _parse_word(text: str) -> list:
    tokens = text.split()
    if all(tok.lstrip("-").isdigit() for tok in tokens):
        return [int(tok) for tok in tokens]
    return tokens


def _measure(args, out) -> None:
    n, k = args.n, args.k
    if args.law == "riffle":
        mu = riffle_measure(n, k)
    elif args.law == "cut":
        mu = cut_measure(n)
    elif args.law == "riffle-cut":
        mu = shuffle_then_cut_measure(n, k)
    elif args.law == "cut-riffle":
        mu = cut_then_shuffle_measure(n, k)
    else:
        if n < 2:
            raise ValueError("affine shuffles need n >= 2")
        mu = affine_measure(n, k, args.method)
        if not args.no_crosscheck and args.method != "ramanujan":
            if affine_measure(n, k, "ramanujan") != mu:
                raise VerificationFailure(f"{args.method} and ramanujan definitions disagree")
    out.write(class_measure(mu).to_tsv() if args.by_class else mu.to_tsv())


def _sample(args, out) -> None:
    rng = random.Random(args.seed)
    if args.law == "affine2":
        if args.k != 2:
            raise ValueError("the affine sampler implements 2-shuffles only (--k 2)")
        if args.n < 2:
            raise ValueError("affine shuffles need n >= 2")
        draw = lambda: affine2_sample(args.n, rng)  # noqa: E731
    else:
        draw = lambda: gsr_sample(args.n, args.k, rng)  # noqa: E731
    for _ in range(args.count):
        out.write(" ".join(map(str, draw())) + "\n")


def _dispatch(args, out) -> int:
    if args.command == "measure":
        _measure(args, out)
    elif args.command == "tv":
        table = tv_riffle_table(args.n, args.k, args.max_shuffles, with_cut=args.with_cut)
        for m, value in enumerate(table, start=1):
            out.write(f"{m}\t{format_rational(value)}\n")
    elif args.command == "verify":
        failed = 0
        for result in run_suite(args.suite, args.max_n):
            out.write(format_result(result) + "\n")
            failed += not result.ok
        out.write(f"{'all expected checks passed' if not failed else f'{failed} check(s) failed'}\n")
        return 1 if failed else 0
    elif args.command == "patience":
        word = _parse_word(args.word)
        if not word:
            raise ValueError("empty word")
        out.write(" ".join(map(str, patience_play(word, args.ties))) + "\n")
    elif args.command == "sample":
        _sample(args, out)
    elif args.command == "reciprocity":
        a = modular_reciprocity_count(args.m, args.x, args.y)
        b = modular_reciprocity_count(args.m, args.y, args.x)
        out.write(f"{a}\t{b}\t{'symmetric' if a == b else 'ASYMMETRIC'}\n")
        return 0 if a == b else 1
    return 0


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out)
    except CapError as exc:
        print(f"cutshuffle: size cap exceeded: {exc}", file=sys.stderr)
        return 3
    except VerificationFailure as exc:
        print(f"cutshuffle: verification failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError) as exc:
        print(f"cutshuffle: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
