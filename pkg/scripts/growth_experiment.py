#!/usr/bin/env python3
"""Compare the predicted polynomial degree of dim W_m(l) against the
empirically measured doubling exponent log2(dim W_2m / dim W_m).

Example:
    python3 scripts/growth_experiment.py D4 2 --max-m 64
"""

import argparse
import math

from krdecomp import build_tree, growth_degree, root_system, total_dimension


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("algebra")
    ap.add_argument("ell", type=int)
    ap.add_argument("--max-m", type=int, default=32)
    ap.add_argument("--mode", choices=["auto", "search", "fixture"], default="auto")
    args = ap.parse_args()

    rs = root_system(args.algebra)
    report = growth_degree(rs, args.ell, mode=args.mode)
    print(f"{rs.id} node {args.ell}: g = {report.g}, "
          f"half-orbit = {report.half_orbit_dim}, degree = {report.degree}")
    print(f"{'m':>6} {'dim W_m':>24} {'dim W_2m / dim W_m':>20} {'exponent':>10}")
    m = 1
    while m <= args.max_m:
        d1 = total_dimension(build_tree(rs, args.ell, m))
        d2 = total_dimension(build_tree(rs, args.ell, 2 * m))
        print(f"{m:>6} {d1:>24} {d2 / d1:>20.3f} {math.log2(d2 / d1):>10.4f}")
        m *= 2
    print(f"predicted limit exponent: {report.degree}")


if __name__ == "__main__":
    main()
