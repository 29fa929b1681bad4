"""Text and JSON renderings of decomposition trees."""

from __future__ import annotations

import json

from .rootsystem import AlgebraId, build_root_system, weyl_dimension
from .tree import DecompositionTree, TreeNode


def weight_str(w) -> str:
    """omega-basis weight in the table notation, e.g. '2ω2+ω4'."""
    terms = [(str(c) if c > 1 else "") + f"ω{k + 1}"
             for k, c in enumerate(w) if c]
    return "+".join(terms) if terms else "0"


def _summand(node: TreeNode) -> str:
    prefix = f"{node.multiplicity} " if node.multiplicity > 1 else ""
    return f"{prefix}V_{{{weight_str(node.highest_weight)}}}"


def render_flat(tree: DecompositionTree, dims: bool = False) -> str:
    """Depth-first one-line listing: V_{...} ⊕1 2 V_{...} ..., with the
    level after each direct-sum sign."""
    parts = []
    for label, node in tree.root.walk():
        piece = _summand(node)
        if dims:
            piece += f" [dim {weyl_dimension(tree.rs, node.highest_weight)}]"
        if label:
            parts.append(f"⊕{len(label)} {piece}")
        else:
            parts.append(piece)
    out = " ".join(parts)
    if dims:
        from .tree import total_dimension
        out += f"\ntotal dimension {total_dimension(tree)}"
    return out


def render_tree(tree: DecompositionTree, dims: bool = False) -> str:
    lines = []

    def visit(node, depth):
        edge = "" if node.increment is None else "(" + ",".join(map(str, node.increment)) + ") "
        line = "  " * depth + edge + _summand(node)
        if dims:
            line += f" [dim {weyl_dimension(tree.rs, node.highest_weight)}]"
        lines.append(line)
        for child in node.children:
            visit(child, depth + 1)

    visit(tree.root, 0)
    if dims:
        from .tree import total_dimension
        lines.append(f"total dimension {total_dimension(tree)}")
    return "\n".join(lines)


def _node_to_obj(node: TreeNode) -> dict:
    return {
        "delta": list(node.increment) if node.increment is not None else None,
        "hw_omega": list(node.highest_weight),
        "multiplicity": str(node.multiplicity),
        "children": [_node_to_obj(c) for c in node.children],
    }


def render_json(tree: DecompositionTree, dims: bool = False) -> str:
    doc = {
        "algebra": str(tree.rs.id),
        "node": tree.ell,
        "level": tree.m,
        "tree": _node_to_obj(tree.root),
    }
    if dims:
        from .tree import total_dimension
        doc["total_dimension"] = str(total_dimension(tree))
    return json.dumps(doc, indent=2)


def _node_from_obj(obj) -> TreeNode:
    return TreeNode(
        increment=tuple(obj["delta"]) if obj["delta"] is not None else None,
        highest_weight=tuple(obj["hw_omega"]),
        multiplicity=int(obj["multiplicity"]),
        children=[_node_from_obj(c) for c in obj["children"]],
    )


def parse_json(text: str) -> DecompositionTree:
    """Round-trip partner of render_json."""
    doc = json.loads(text)
    rs = build_root_system(AlgebraId.parse(doc["algebra"]))
    root = _node_from_obj(doc["tree"])
    count = 0
    aggregate = {}
    for _, node in root.walk():
        count += 1
        hw = node.highest_weight
        aggregate[hw] = aggregate.get(hw, 0) + node.multiplicity
    return DecompositionTree(rs, doc["node"], doc["level"], root, count, aggregate)
