"""Command-line interface.

Verbs:
  decompose ALGEBRA ELL M   build and print the decomposition tree of W_m(l)
  verify    ALGEBRA ELL M   cross-check the tree against the brute-force oracle
  growth    ALGEBRA ELL     growth exponent and polynomial degree of dim W_m(l)
  fixtures  [NAME ...]      re-derive the bundled published tables

Exit codes: 0 success, 1 mismatch, 2 invalid input, 3 resource limit hit.
"""

from __future__ import annotations

import argparse
import sys

from .fixtures import FixtureFormatError, check_fixture, discover_fixtures
from .growth import DEFAULT_BUDGET, SearchBudgetError, growth_degree
from .oracle import DEFAULT_TUPLE_LIMIT, OracleScaleError, full_decomposition_oracle
from .render import render_flat, render_json, render_tree, weight_str
from .rootsystem import InvalidAlgebraError, root_system
from .tree import DEFAULT_NODE_LIMIT, TreeScaleError, build_tree

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_RESOURCE = 3

_RENDERERS = {"tree": render_tree, "flat": render_flat, "json": render_json}


def _cmd_decompose(args) -> int:
    rs = root_system(args.algebra)
    tree = build_tree(rs, args.ell, args.m, node_limit=args.node_limit)
    print(_RENDERERS[args.format](tree, dims=args.dims))
    print(f"{tree.node_count} nodes", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args) -> int:
    rs = root_system(args.algebra)
    tree = build_tree(rs, args.ell, args.m, node_limit=args.node_limit)
    expected = full_decomposition_oracle(rs, args.ell, args.m,
                                         tuple_limit=args.oracle_limit)
    got = tree.aggregate
    keys = sorted(set(expected) | set(got), reverse=True)
    bad = 0
    for hw in keys:
        e, g = expected.get(hw, 0), got.get(hw, 0)
        if e != g:
            bad += 1
            print(f"MISMATCH {weight_str(hw)}: oracle {e}, tree {g}")
    if bad:
        print(f"{bad} mismatched weights of {len(keys)}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"ok: {len(keys)} weights agree ({tree.node_count} tree nodes)")
    return EXIT_OK


def _cmd_growth(args) -> int:
    rs = root_system(args.algebra)
    report = growth_degree(rs, args.ell, search_budget=args.budget, mode=args.mode)
    how = "explicit construction" if report.fixture_derived else "exact search"
    print(f"{rs.id} node {args.ell}: g = {report.g}, "
          f"half-orbit dimension = {report.half_orbit_dim}, "
          f"degree = {report.degree}  ({how})")
    if report.degree_discrepancy:
        print(f"warning: {report.degree_discrepancy}", file=sys.stderr)
    for step in report.best_path_type.deltas:
        print("  " + ",".join(map(str, step)))
    return EXIT_OK


def _cmd_fixtures(args) -> int:
    fixtures = discover_fixtures()
    if args.names:
        wanted = set(args.names)
        fixtures = [fx for fx in fixtures if fx.name in wanted]
        missing = wanted - {fx.name for fx in fixtures}
        if missing:
            raise FixtureFormatError(f"unknown fixtures: {sorted(missing)}")
    failures = 0
    for fx in fixtures:
        result = check_fixture(fx, node_limit=args.node_limit)
        status = "ok" if result.ok else "FAIL"
        print(f"{status:4s} {fx.name}")
        if not result.ok:
            failures += 1
            print(f"     {result.detail}", file=sys.stderr)
    print(f"{len(fixtures)} fixtures, {failures} failures", file=sys.stderr)
    return EXIT_MISMATCH if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="krdecomp",
        description="Exact decomposition of Kirillov-Reshetikhin modules "
                    "into irreducible g-modules (simply-laced types).")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("decompose", help="build and print a decomposition tree")
    p.add_argument("algebra", help="algebra name, e.g. A3, D5, E6")
    p.add_argument("ell", type=int, help="Dynkin node index (1-based)")
    p.add_argument("m", type=int, help="level")
    p.add_argument("--format", choices=sorted(_RENDERERS), default="tree")
    p.add_argument("--dims", action="store_true",
                   help="annotate summands with their dimensions")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="cross-check tree against the oracle")
    p.add_argument("algebra")
    p.add_argument("ell", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--oracle-limit", type=int, default=DEFAULT_TUPLE_LIMIT)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("growth", help="asymptotic dimension growth")
    p.add_argument("algebra")
    p.add_argument("ell", type=int)
    p.add_argument("--mode", choices=["auto", "search", "fixture"], default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="lattice-point budget for the exact search")
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("fixtures", help="re-derive the bundled tables")
    p.add_argument("names", nargs="*", help="fixture names (default: all)")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidAlgebraError, FixtureFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (TreeScaleError, OracleScaleError, SearchBudgetError) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
