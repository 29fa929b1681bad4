"""Decomposition trees for W_m(l).

A node is indexed by its label: the chain of increments delta_1 >= delta_2
>= ... >= delta_s (nonincreasing, coordinatewise, in the alpha basis) such
that every partial sum d_n keeps min(n, m)*omega_ell - d_n dominant.  The
node's multiplicity is a product of binomials in the P-values of that chain,
and summing multiplicities by highest weight recovers the g-module
decomposition of W_m(l).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .oracle import binom
from .rootsystem import (
    RootSystem,
    alpha_to_omega,
    dominant_weights_below,
    fundamental_weight,
    is_dominant,
    is_integral,
    omega_to_alpha,
    weight_scale,
    weight_sub,
    weyl_dimension,
)


class TreeScaleError(RuntimeError):
    """Node limit exceeded; carries the partial count."""

    def __init__(self, message, partial_count):
        super().__init__(message)
        self.partial_count = partial_count


DEFAULT_NODE_LIMIT = 500_000
_VECTORIZE_THRESHOLD = 4096  # box sizes above this go through numpy


@dataclass
class TreeNode:
    increment: tuple | None      # alpha-coords of delta_s; None at the root
    highest_weight: tuple        # omega-coords of m*omega_ell - d_s
    multiplicity: int
    children: list = field(default_factory=list)

    def walk(self):
        """Depth-first iterator of (label, node); children in ascending-lex
        order of increments, matching the published table listing order."""
        stack = [((), self)]
        while stack:
            label, node = stack.pop()
            yield label, node
            for child in reversed(node.children):
                stack.append((label + (child.increment,), child))


@dataclass
class DecompositionTree:
    rs: RootSystem
    ell: int
    m: int
    root: TreeNode
    node_count: int
    aggregate: dict  # highest weight -> summed multiplicity


def valid_extensions(rs: RootSystem, ell: int, m: int, label: tuple) -> list:
    """All increments delta_{s+1} that extend a valid label, ascending-lex.

    For the empty label these are the integral d_1 > 0 with
    min(1, m)*omega_ell - d_1 dominant; afterwards the candidates live in
    the box 0 < delta <= delta_s and are filtered by dominance."""
    r = rs.rank
    s = len(label)
    if s == 0:
        mm = min(1, m)
        top = weight_scale(mm, fundamental_weight(rs, ell))
        out = []
        for mu in dominant_weights_below(rs, top):
            d1 = omega_to_alpha(rs, weight_sub(top, mu))
            if is_integral(d1) and any(d1):
                out.append(d1)
        return sorted(out)

    last = label[-1]
    d_s = tuple(sum(col) for col in zip(*label))
    base = weight_sub(weight_scale(min(s + 1, m), fundamental_weight(rs, ell)),
                      alpha_to_omega(rs, d_s))
    box = math.prod(c + 1 for c in last)
    if box > _BOX_SCAN_LIMIT:
        return _extensions_by_dominance(rs, base, last)
    if box > _VECTORIZE_THRESHOLD:
        return _extensions_vectorized(rs, base, last)
    out = []
    for delta in itertools.product(*(range(c + 1) for c in last)):
        if not any(delta):
            continue
        hw = weight_sub(base, alpha_to_omega(rs, delta))
        if is_dominant(hw):
            out.append(delta)
    return sorted(out)


_BOX_SCAN_LIMIT = 4_000_000


def _extensions_vectorized(rs: RootSystem, base, last):
    shape = tuple(c + 1 for c in last)
    box = math.prod(shape)
    cart = np.array(rs.cartan, dtype=np.int64)
    base_arr = np.array(base, dtype=np.int64)
    found = []
    chunk = 1 << 20
    for start in range(0, box, chunk):
        idx = np.arange(start, min(start + chunk, box))
        pts = np.stack(np.unravel_index(idx, shape), axis=1)
        mask = pts.any(axis=1) & (base_arr - pts @ cart.T >= 0).all(axis=1)
        if mask.any():
            found.extend(map(tuple, pts[mask].tolist()))
    return sorted(found)


def _extensions_by_dominance(rs: RootSystem, base, last):
    """For very large boxes: the candidates are exactly base - mu over the
    dominant mu below base, clipped to the box 0 < delta <= delta_s."""
    out = []
    for mu in dominant_weights_below(rs, base):
        delta = omega_to_alpha(rs, weight_sub(base, mu))
        if any(delta) and all(0 <= d <= c for d, c in zip(delta, last)):
            out.append(delta)
    return sorted(out)


def node_multiplicity(rs: RootSystem, ell: int, m: int, label: tuple) -> int:
    """Product over n of binom(P^(k)_n + dhat^(k)_n, dhat^(k)_n), where
    dhat_n = delta_n - delta_{n+1} (delta_{s+1} = 0)."""
    s = len(label)
    mult = 1
    d = (0,) * rs.rank
    for n in range(1, s + 1):
        d = tuple(a + b for a, b in zip(d, label[n - 1]))
        nxt = label[n] if n < s else (0,) * rs.rank
        dhat = tuple(a - b for a, b in zip(label[n - 1], nxt))
        if not any(dhat):
            continue
        p = weight_sub(weight_scale(min(n, m), fundamental_weight(rs, ell)),
                       alpha_to_omega(rs, d))
        for pk, dk in zip(p, dhat):
            if dk:
                mult *= binom(pk + dk, dk)
    return mult


def build_tree(rs: RootSystem, ell: int, m: int,
               node_limit: int = DEFAULT_NODE_LIMIT) -> DecompositionTree:
    if not 1 <= ell <= rs.rank:
        raise ValueError(f"node index {ell} out of range for {rs.id}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    top = weight_scale(m, fundamental_weight(rs, ell))
    root = TreeNode(None, top, 1)
    aggregate = {}
    count = 0

    def expand(node, label, d_s):
        nonlocal count
        count += 1
        if count > node_limit:
            raise TreeScaleError(
                f"tree scale exceeded: more than {node_limit} nodes", count)
        agg_key = node.highest_weight
        aggregate[agg_key] = aggregate.get(agg_key, 0) + node.multiplicity
        for delta in valid_extensions(rs, ell, m, label):
            child_label = label + (delta,)
            d_next = tuple(a + b for a, b in zip(d_s, delta))
            hw = weight_sub(top, alpha_to_omega(rs, d_next))
            child = TreeNode(delta, hw,
                             node_multiplicity(rs, ell, m, child_label))
            node.children.append(child)
            expand(child, child_label, d_next)

    expand(root, (), (0,) * rs.rank)
    return DecompositionTree(rs, ell, m, root, count, aggregate)


def aggregate_multiplicities(tree: DecompositionTree) -> dict:
    return dict(tree.aggregate)


def total_dimension(tree: DecompositionTree) -> int:
    return sum(node.multiplicity * weyl_dimension(tree.rs, node.highest_weight)
               for _, node in tree.root.walk())


def total_multiplicity(tree: DecompositionTree) -> int:
    return sum(tree.aggregate.values())


@dataclass
class LiftReport:
    ok: bool
    m: int
    m2: int
    detail: str = ""


def check_lift(rs: RootSystem, ell: int, m: int, m2: int,
               node_limit: int = DEFAULT_NODE_LIMIT) -> LiftReport:
    """Rows 0..m of the trees at levels m and m2 > m must agree as labeled
    trees, with highest weights shifted by (m2 - m)*omega_ell."""
    if m2 <= m:
        raise ValueError("need m2 > m")
    t1 = build_tree(rs, ell, m, node_limit)
    t2 = build_tree(rs, ell, m2, node_limit)
    shift = weight_scale(m2 - m, fundamental_weight(rs, ell))

    def compare(a, b, depth, path):
        if a.multiplicity != b.multiplicity:
            return (f"label {path}: multiplicity {a.multiplicity} != "
                    f"{b.multiplicity}")
        if tuple(x + y for x, y in zip(a.highest_weight, shift)) != b.highest_weight:
            return f"label {path}: highest weight not shifted by {m2 - m}*omega_{ell}"
        if depth == m:
            return None
        inc_a = [c.increment for c in a.children]
        inc_b = [c.increment for c in b.children]
        if inc_a != inc_b:
            return f"label {path}: children {inc_a} != {inc_b}"
        for ca, cb in zip(a.children, b.children):
            err = compare(ca, cb, depth + 1, path + (ca.increment,))
            if err:
                return err
        return None

    err = compare(t1.root, t2.root, 0, ())
    return LiftReport(err is None, m, m2, err or "")
