#!/usr/bin/env python3
"""Sweep the degree-6 census over a range of vertex counts and print a
summary table: counts by surface type, regularity, and matched family names.

Example:
    python3 scripts/census_sweep.py --min-n 7 --max-n 12 --jobs 4
"""

import argparse
import sys
import time

from flatland import classify_census


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=7)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--budget", type=float, default=None,
                    help="time budget in seconds per census run")
    args = ap.parse_args()

    print(f"{'n':>3} {'total':>5} {'torus':>5} {'klein':>5} {'weak':>5} {'time':>7}")
    for n in range(args.min_n, args.max_n + 1):
        t0 = time.time()
        report = classify_census(n, jobs=args.jobs, budget_seconds=args.budget)
        dt = time.time() - t0
        print(f"{n:>3} {report.total:>5} {report.torus_count:>5} "
              f"{report.klein_bottle_count:>5} {report.weakly_regular_count:>5} "
              f"{dt:>6.2f}s")
        for i, item in enumerate(report.items):
            names = ", ".join(item.matched_family_names) or "-"
            flags = ("weakly regular" if item.weakly_regular else "not weakly regular")
            if item.combinatorially_regular:
                flags = "combinatorially regular"
            print(f"      [{i}] {item.surface}  {flags}  {names}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
