"""Zero-impossibility scan over all small permutation automata.

    python scripts/zero_scan.py --state-bound 4 --alphabet-bound 2

Bounds beyond the defaults grow quickly: the script prints the number of
automata it is about to enumerate before starting.
"""

import argparse
import time

from permquot.spectrum import count_permutation_automata, render, zero_scan


def main():
    parser = argparse.ArgumentParser(description="Zero-impossibility scan.")
    parser.add_argument("--state-bound", type=int, default=4)
    parser.add_argument("--alphabet-bound", type=int, default=2)
    parser.add_argument("--format", choices=["text", "machine"], default="text")
    args = parser.parse_args()

    total = count_permutation_automata(args.state_bound, args.alphabet_bound)
    print(f"enumerating {total} permutation automata")
    start = time.perf_counter()
    report = zero_scan(args.state_bound, args.alphabet_bound)
    print(render(report, args.format), end="")
    print(f"elapsed: {time.perf_counter() - start:.1f}s")
    raise SystemExit(0 if report.ok else 1)


if __name__ == "__main__":
    main()
