"""Run verify_theorem over a grid of (m, n) and print one summary row per cell.

    python scripts/verify_grid.py --max-m 3 --max-n 3 --alpha-max 6
"""

import argparse
import time

from permquot.spectrum import verify_theorem


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=3)
    parser.add_argument("--alpha-max", type=int, default=6)
    parser.add_argument("--cycle-bound", type=int, default=12)
    args = parser.parse_args()

    print(f"{'m':>2} {'n':>2}  {'attained':<24} {'unary':<22} status  seconds")
    all_ok = True
    for m in range(1, args.max_m + 1):
        for n in range(1, args.max_n + 1):
            start = time.perf_counter()
            report = verify_theorem(m, n, args.alpha_max, cycle_bound=args.cycle_bound)
            elapsed = time.perf_counter() - start
            unary = sorted(report.unary.attained) if report.unary else []
            status = "PASS" if report.ok else "FAIL"
            all_ok &= report.ok
            attained = " ".join(map(str, report.attained))
            print(f"{m:>2} {n:>2}  {attained:<24} {str(unary):<22} {status:<6}  {elapsed:.2f}")
            for failure in report.failures:
                print(f"       {failure}")
    raise SystemExit(0 if all_ok else 1)


if __name__ == "__main__":
    main()
