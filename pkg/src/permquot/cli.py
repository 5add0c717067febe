"""Command-line front end.

Exit codes: 0 success (or "equal"), 1 negative verdict, 2 usage or parse
error, 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import spectrum
from .automata import asc, distinguishing_word, is_permutation_automaton, minimize
from .errors import (
    AutomatonError,
    BadParams,
    CounterexampleFound,
    ParseError,
    WitnessCheckFailed,
)
from .quotient import right_quotient
from .textfmt import format_dfa, read_dfa
from .witnesses import quotient_divisor, quotient_source, unary_cycle

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required here")


def cmd_witness(args) -> int:
    if args.kind == "source":
        _need(args, "m", "alpha")
        dfa = quotient_source(args.m, args.alpha)
    elif args.kind == "divisor":
        _need(args, "n", "alpha")
        dfa = quotient_divisor(args.n, args.alpha)
    else:
        _need(args, "t")
        dfa = unary_cycle(args.t)
    _emit(format_dfa(dfa), args.out)
    return EXIT_OK


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_quotient(args) -> int:
    a, b = read_dfa(args.a), read_dfa(args.b)
    result = right_quotient(a, b)
    summary = {
        "saturated_finals": sorted(result.saturated_finals),
        "saturated_final_count": len(result.saturated_finals),
        "asc": asc(result.automaton),
        "a_is_permutation": is_permutation_automaton(a),
        "b_is_permutation": is_permutation_automaton(b),
        "divisor_group_size": None if result.divisor_group is None else len(result.divisor_group),
    }
    if args.format == "machine":
        summary["automaton"] = format_dfa(result.automaton)
        if args.out:
            _emit(format_dfa(result.automaton), args.out)
        sys.stdout.write(json.dumps(summary, indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    lines = [
        f"saturated finals: {' '.join(map(str, summary['saturated_finals']))}".rstrip(),
        f"|F~|: {summary['saturated_final_count']}",
        f"asc: {summary['asc']}",
        f"A permutation automaton: {_yes(summary['a_is_permutation'])}",
        f"B permutation automaton: {_yes(summary['b_is_permutation'])}",
    ]
    if summary["divisor_group_size"] is not None:
        lines.append(f"|G_B|: {summary['divisor_group_size']}")
    if args.out:
        _emit(format_dfa(result.automaton), args.out)
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        # summary as comment lines keeps stdout a valid automaton file
        sys.stdout.write(format_dfa(result.automaton))
        sys.stdout.write("".join(f"# {line}\n" for line in lines))
    return EXIT_OK


def cmd_asc(args) -> int:
    print(asc(read_dfa(args.path)))
    return EXIT_OK


def cmd_minimize(args) -> int:
    _emit(format_dfa(minimize(read_dfa(args.path))), args.out)
    return EXIT_OK


def cmd_equiv(args) -> int:
    x, y = read_dfa(args.x), read_dfa(args.y)
    word = distinguishing_word(x, y)
    if word is None:
        print("equal")
        return EXIT_OK
    print(f"different (shortest distinguishing word: {word!r})")
    return EXIT_NEGATIVE


def cmd_verify_theorem(args) -> int:
    _need(args, "m", "n", "alpha_max")
    if args.m < 1 or args.n < 1:
        raise UsageError("verify-theorem needs --m >= 1 and --n >= 1")
    report = spectrum.verify_theorem(
        args.m,
        args.n,
        args.alpha_max,
        cycle_bound=args.cycle_bound,
        state_bound=args.state_bound,
        alphabet_bound=args.alphabet_bound,
    )
    sys.stdout.write(spectrum.render(report, args.format))
    if report.ok:
        return EXIT_OK
    return EXIT_INTERNAL if report.internal_error else EXIT_NEGATIVE


def cmd_unary_bruteforce(args) -> int:
    _need(args, "m", "n")
    if args.m < 1 or args.n < 1 or args.cycle_bound < 2:
        raise UsageError("unary-bruteforce needs --m, --n >= 1 and --cycle-bound >= 2")
    report = spectrum.unary_bruteforce(args.m, args.n, args.cycle_bound)
    sys.stdout.write(spectrum.render(report, args.format))
    return EXIT_OK


def cmd_zero_scan(args) -> int:
    if args.state_bound < 1 or args.alphabet_bound < 1:
        raise UsageError("bounds must be positive")
    report = spectrum.zero_scan(args.state_bound, args.alphabet_bound)
    sys.stdout.write(spectrum.render(report, args.format))
    try:
        report.check()
    except CounterexampleFound as exc:
        a, b = exc.pair
        sys.stderr.write(f"{exc}\nfirst counterexample:\n{format_dfa(a)}--\n{format_dfa(b)}")
        return EXIT_NEGATIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permquot",
        description="Permutation automata, accepting-state complexity and right quotients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["text", "machine"], default="text")

    p = sub.add_parser("witness", help="write a witness automaton")
    p.add_argument("kind", choices=["source", "divisor", "cycle"])
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("quotient", help="right quotient A/B of two automaton files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--out")
    add_format(p)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("asc", help="accepting-state complexity of an automaton file")
    p.add_argument("path")
    p.set_defaults(func=cmd_asc)

    p = sub.add_parser("minimize", help="write the canonical minimal DFA")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("equiv", help="language equivalence; exit 0 if equal, 1 if not")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("verify-theorem", help="certify the quotient spectrum for (m, n)")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha-max", type=int)
    p.add_argument("--cycle-bound", type=int, default=spectrum.DEFAULT_CYCLE_BOUND)
    p.add_argument("--state-bound", type=int, default=spectrum.DEFAULT_STATE_BOUND)
    p.add_argument("--alphabet-bound", type=int, default=spectrum.DEFAULT_ALPHABET_BOUND)
    add_format(p)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("unary-bruteforce", help="search unary cycle pairs for (m, n)")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--cycle-bound", type=int, default=spectrum.DEFAULT_CYCLE_BOUND)
    add_format(p)
    p.set_defaults(func=cmd_unary_bruteforce)

    p = sub.add_parser("zero-scan", help="check no quotient of nonempty languages is empty")
    p.add_argument("--state-bound", type=int, default=spectrum.DEFAULT_STATE_BOUND)
    p.add_argument("--alphabet-bound", type=int, default=spectrum.DEFAULT_ALPHABET_BOUND)
    add_format(p)
    p.set_defaults(func=cmd_zero_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BadParams, ParseError, OSError) as exc:
        print(f"permquot {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WitnessCheckFailed as exc:
        print(f"permquot {args.command}: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except AutomatonError as exc:
        print(f"permquot {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
