#!/usr/bin/env python3
"""Run the desk-scale point counts and print a timing table.

The degree-6 Ree count visits ~3.9e8 field elements and takes CPU-hours;
pass --long to include it.
"""

import argparse

from maxcurve.counting import count_points, default_threads
from maxcurve.curves import params_from_s

JOBS = [
    ("suzuki-cover", 1, (1, 2, 4)),
    ("suzuki-base", 1, (4,)),
    ("suzuki-cover", 2, (4,)),
    ("ree-cover", 1, (1, 2, 3)),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--long", action="store_true", help="include the degree-6 Ree count")
    parser.add_argument("--threads", type=int, default=default_threads())
    args = parser.parse_args()

    jobs = [j for j in JOBS]
    if args.long:
        jobs.append(("ree-cover", 1, (6,)))

    print(f"{'family':14} {'s':>2} {'ext':>3} {'field':>8} {'points':>12} {'target':>12} {'max':>5} {'wall':>9}")
    for family, s, exts in jobs:
        params = params_from_s(family, s)
        for r in exts:
            rep = count_points(family, params, r, threads=args.threads, long_ok=args.long)
            target = rep.hw_target if rep.hw_target is not None else "-"
            print(
                f"{family:14} {s:>2} {r:>3} {f'{rep.ell:.0e}' if rep.ell > 10**7 else rep.ell:>8} "
                f"{rep.n_points:>12} {target:>12} {str(rep.is_maximal):>5} {rep.wall_time:>8.2f}s"
            )


if __name__ == "__main__":
    main()
