"""Command line entry point.

Exit codes: 0 success, 1 verification failure, 2 parse error or bad usage,
3 variable count out of range, 4 construction precondition violated.
"""
from __future__ import annotations

import argparse
import os
import sys

from .construct import ConstructionError, blockseq_of, format_blocks, function_of, parse_blocks, sac_concat, theorem2_family
from .core import MAX_N, BooleanFunction, ParseError, RangeError, format_anf, from_anf, parse_anf, parse_hex, to_anf, to_hex
from .report import build_report
from .verify import DEFAULT_SEED, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_RANGE, EXIT_CONSTRUCT = 0, 1, 2, 3, 4

FORMATS = ("hex", "anf", "blocks")


class UsageError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_input(arg: str | None) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    if os.path.isfile(arg):
        with open(arg) as fh:
            return fh.read()
    return arg


def _check_range(n: int) -> None:
    if not 2 <= n <= MAX_N:
        raise UsageError(f"n must be in 2..{MAX_N}, got {n}", EXIT_RANGE)


def parse_function(text: str, fmt: str, n: int | None = None) -> BooleanFunction:
    """Parse ``text`` in one of the three formats, mapping failures to exit codes."""
    try:
        if fmt == "hex":
            f = parse_hex(text)
        elif fmt == "anf":
            a = parse_anf(text, n)
            _check_range(a.n)
            f = from_anf(a)
        elif fmt == "blocks":
            bs = parse_blocks(text)
            _check_range((4 * len(bs)).bit_length() - 1)
            f = function_of(bs)
        else:
            raise UsageError(f"unknown format {fmt!r}", EXIT_PARSE)
    except RangeError as e:
        raise UsageError(str(e), EXIT_RANGE) from e
    except ParseError as e:
        raise UsageError(str(e), EXIT_PARSE) from e
    if n is not None and f.n != n:
        raise UsageError(f"input has n={f.n}, --n says {n}", EXIT_PARSE)
    _check_range(f.n)
    return f


def render(f: BooleanFunction, fmt: str) -> str:
    if fmt == "hex":
        return to_hex(f)
    if fmt == "anf":
        return format_anf(to_anf(f))
    return format_blocks(blockseq_of(f))


def _emit_report(f: BooleanFunction, source: str, output: str) -> None:
    rep = build_report(f, source)
    sys.stdout.write(rep.to_text() if output == "text" else rep.to_json())


def cmd_analyze(args) -> int:
    f = parse_function(_read_input(args.input), args.format, args.n)
    _emit_report(f, args.format, args.output)
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        if args.kind == "thm2":
            if args.n is None:
                raise UsageError("thm2 needs --n", EXIT_PARSE)
            f = theorem2_family(args.n, granularity=args.granularity)
        else:
            if args.h is None:
                raise UsageError("sac-concat needs --h", EXIT_PARSE)
            h = parse_function(args.h, "hex")
            a = None
            if args.a is not None:
                if len(args.a) != h.n or set(args.a) - {"0", "1"}:
                    raise UsageError(f"--a must be a {h.n}-bit string", EXIT_PARSE)
                a = int(args.a, 2)
            f = sac_concat(h, args.b, a)
    except ConstructionError as e:
        raise UsageError(str(e), EXIT_CONSTRUCT) from e
    print(f"hex: {to_hex(f)}")
    print(f"anf: {render(f, 'anf')}")
    print(f"blocks: {render(f, 'blocks')}")
    if args.analyze:
        _emit_report(f, args.kind, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.seed)
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{args.suite}: {len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_convert(args) -> int:
    f = parse_function(_read_input(args.input), args.from_format, args.n)
    print(render(f, args.to_format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="avalanche", description="Avalanche characteristics of Boolean functions.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report every indicator of a function")
    a.add_argument("input", nargs="?", help="inline text or a file path; stdin when omitted")
    a.add_argument("--format", choices=FORMATS, default="hex")
    a.add_argument("--n", type=int)
    a.add_argument("--output", choices=("text", "structured"), default="structured")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="build a SAC function")
    c.add_argument("kind", choices=("sac-concat", "thm2"))
    c.add_argument("--n", type=int)
    c.add_argument("--h", help="hex truth table of h, e.g. n=3:0f")
    c.add_argument("--b", type=int, choices=(0, 1), default=0)
    c.add_argument("--a", help="odd-weight shift as a bit string over h's variables")
    c.add_argument("--granularity", choices=("block", "bit"), default="block")
    c.add_argument("--analyze", action="store_true")
    c.add_argument("--output", choices=("text", "structured"), default="structured")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("convert", help="convert between hex, ANF and block strings")
    t.add_argument("input", nargs="?")
    t.add_argument("--from", dest="from_format", choices=FORMATS, required=True)
    t.add_argument("--to", dest="to_format", choices=FORMATS, required=True)
    t.add_argument("--n", type=int)
    t.set_defaults(func=cmd_convert)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify" and args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}; choose from {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
