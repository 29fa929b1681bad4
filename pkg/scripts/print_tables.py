#!/usr/bin/env python3
"""Print decomposition tables for a whole family of modules.

Example:
    python3 scripts/print_tables.py E6 --max-m 2
    python3 scripts/print_tables.py D5 --max-m 3 --dims
"""

import argparse

from krdecomp import build_tree, render_flat, root_system


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("algebra")
    ap.add_argument("--max-m", type=int, default=2)
    ap.add_argument("--dims", action="store_true")
    args = ap.parse_args()

    rs = root_system(args.algebra)
    for ell in range(1, rs.rank + 1):
        for m in range(1, args.max_m + 1):
            tree = build_tree(rs, ell, m)
            print(f"W_{m}({ell}):  {render_flat(tree, dims=args.dims)}")
        print()


if __name__ == "__main__":
    main()
