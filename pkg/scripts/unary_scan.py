"""Exhaustive unary cycle search for each (m, n) up to a bound.

Reports which alpha in [1, mn] are reached by pairs of minimal single-cycle
automata of length at most --cycle-bound, and how many pairs that took.
Values beyond the search bound are reported as missing, never as impossible.

    python scripts/unary_scan.py --max-m 3 --max-n 3 --cycle-bound 12
"""

import argparse
import time

from permquot.spectrum import minimal_unary_cycles, unary_bruteforce


def main():
    parser = argparse.ArgumentParser(description="Exhaustive unary cycle search.")
    parser.add_argument("--max-m", type=int, default=2)
    parser.add_argument("--max-n", type=int, default=2)
    parser.add_argument("--cycle-bound", type=int, default=12)
    parser.add_argument(
        "--full",
        action="store_true",
        help="also report alpha > mn reached by the same pairs",
    )
    args = parser.parse_args()

    for m in range(1, args.max_m + 1):
        for n in range(1, args.max_n + 1):
            cycles = len(minimal_unary_cycles(m, args.cycle_bound)), len(
                minimal_unary_cycles(n, args.cycle_bound)
            )
            start = time.perf_counter()
            report = unary_bruteforce(m, n, args.cycle_bound)
            elapsed = time.perf_counter() - start
            attained = sorted(report.attained)
            shown = attained if args.full else [a for a in attained if a <= m * n]
            flag = f"missing {report.missing}" if report.partial else "complete"
            print(
                f"m={m} n={n} cycles={cycles} pairs={report.pairs_checked} "
                f"attained={shown} {flag} ({elapsed:.1f}s)"
            )


if __name__ == "__main__":
    main()
