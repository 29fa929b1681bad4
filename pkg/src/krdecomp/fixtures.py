"""Regression fixtures: the published decomposition tables as data files.

Each file lists a tree in depth-first order, one node per line as
"<level> <multiplicity> <weight-expr>"; the parent of a level-k node is the
most recent level-(k-1) node.  Comparison against a freshly built tree is
order-insensitive: both sides reduce to a multiset of
(increment-path, highest weight, multiplicity) triples.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .rootsystem import (
    AlgebraId,
    build_root_system,
    in_positive_root_lattice,
    omega_to_alpha,
    weight_sub,
)
from .tree import build_tree

DATA_DIR = Path(__file__).parent / "data"

_TERM_RE = re.compile(r"^(\d*)w(\d+)$")


class FixtureFormatError(ValueError):
    pass


def parse_weight_expr(expr: str, rank: int) -> tuple:
    """'2w1+w6' -> omega-coordinate tuple; '0' is the zero weight."""
    coords = [0] * rank
    if expr != "0":
        for term in expr.split("+"):
            m = _TERM_RE.match(term)
            if not m or not 1 <= int(m.group(2)) <= rank:
                raise FixtureFormatError(f"bad weight term {term!r}")
            coords[int(m.group(2)) - 1] += int(m.group(1) or 1)
    return tuple(coords)


def format_weight_expr(w) -> str:
    terms = [(str(c) if c > 1 else "") + f"w{k + 1}" for k, c in enumerate(w) if c]
    return "+".join(terms) if terms else "0"


@dataclass
class Fixture:
    name: str
    algebra: AlgebraId
    ell: int
    m: int
    rows: list | None          # (level, multiplicity, weight tuple) or None
    node_count: int | None

    @property
    def rs(self):
        return build_root_system(self.algebra)


def load_fixture(path) -> Fixture:
    path = Path(path)
    header = {}
    rows = None
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if rows is None:
            key, _, value = line.partition(":")
            if key == "tree":
                rows = []
                continue
            header[key.strip()] = value.strip()
        else:
            level, mult, expr = line.split()
            rows.append((int(level), int(mult), expr))
    try:
        algebra = AlgebraId.parse(header["algebra"])
        ell = int(header["ell"])
        m = int(header["m"])
    except KeyError as exc:
        raise FixtureFormatError(f"{path}: missing header field {exc}") from exc
    node_count = int(header["node_count"]) if "node_count" in header else None
    if rows is not None:
        rank = algebra.rank
        rows = [(lvl, mult, parse_weight_expr(expr, rank)) for lvl, mult, expr in rows]
    return Fixture(path.stem, algebra, ell, m, rows, node_count)


def discover_fixtures(data_dir=DATA_DIR) -> list:
    return [load_fixture(p) for p in sorted(Path(data_dir).glob("*.txt"))]


def fixture_node_multiset(fx: Fixture) -> Counter:
    """Reconstruct (increment-path, highest weight, multiplicity) triples from
    the depth-first level listing."""
    rs = fx.rs
    stack = []  # per level: (path, highest weight) of the most recent node
    counter = Counter()
    for lvl, mult, hw in fx.rows:
        if lvl == 0:
            if stack:
                raise FixtureFormatError(f"{fx.name}: second root row")
            path = ()
        else:
            if lvl > len(stack) - 1 + 1 or lvl < 1:
                raise FixtureFormatError(f"{fx.name}: level jump to {lvl}")
            parent_path, parent_hw = stack[lvl - 1]
            delta = omega_to_alpha(rs, weight_sub(parent_hw, hw))
            if not in_positive_root_lattice(delta):
                raise FixtureFormatError(
                    f"{fx.name}: increment {delta} not in the positive root lattice")
            path = parent_path + (delta,)
        del stack[lvl:]
        stack.append((path, hw))
        counter[(path, hw, mult)] += 1
    return counter


def tree_node_multiset(tree) -> Counter:
    return Counter((label, node.highest_weight, node.multiplicity)
                   for label, node in tree.root.walk())


@dataclass
class FixtureResult:
    fixture: Fixture
    ok: bool
    detail: str = ""


def check_fixture(fx: Fixture, node_limit=None) -> FixtureResult:
    kwargs = {} if node_limit is None else {"node_limit": node_limit}
    tree = build_tree(fx.rs, fx.ell, fx.m, **kwargs)
    problems = []
    if fx.node_count is not None and tree.node_count != fx.node_count:
        problems.append(f"node count {tree.node_count} != expected {fx.node_count}")
    if fx.rows is not None:
        expected = fixture_node_multiset(fx)
        got = tree_node_multiset(tree)
        if expected != got:
            missing = expected - got
            extra = got - expected
            problems.append(f"missing {dict(missing)!r}; unexpected {dict(extra)!r}")
    return FixtureResult(fx, not problems, "; ".join(problems))
