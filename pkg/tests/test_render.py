from collections import Counter

import pytest

from krdecomp.render import (
    parse_json,
    render_flat,
    render_json,
    render_tree,
    weight_str,
)
from krdecomp.rootsystem import root_system
from krdecomp.tree import build_tree


def test_weight_str():
    assert weight_str((2, 0, 0, 1)) == "2ω1+ω4"
    assert weight_str((0, 0)) == "0"
    assert weight_str((0, 1, 0, 0, 0, 0)) == "ω2"


@pytest.fixture(scope="module")
def e6_tree():
    return build_tree(root_system("E6"), 4, 2)


def test_flat_matches_published_listing(e6_tree):
    out = render_flat(e6_tree)
    assert out.startswith("V_{2ω4} ⊕1 V_{ω1+ω4+ω6} ⊕2 V_{2ω1+2ω6} ⊕1 2 V_{ω2+ω4}")
    # flat output carries every node exactly once
    assert out.count("V_{") == e6_tree.node_count


def test_flat_multiset_equals_tree_multiset(e6_tree):
    flat_summands = Counter()
    for piece in render_flat(e6_tree).replace("⊕", " ").split("V_")[1:]:
        flat_summands[piece.split("}")[0] + "}"] += 1
    tree_summands = Counter(
        "{" + weight_str(n.highest_weight) + "}" for _, n in e6_tree.root.walk())
    assert flat_summands == tree_summands


def test_tree_format_indentation(e6_tree):
    lines = render_tree(e6_tree).splitlines()
    assert lines[0] == "V_{2ω4}"
    assert lines[1].startswith("  (0,1,1,2,1,0) ")
    depths = [(len(l) - len(l.lstrip())) // 2 for l in lines]
    assert max(depths) == 3


def test_dims_annotation():
    t = build_tree(root_system("E8"), 8, 1)
    out = render_flat(t, dims=True)
    assert "[dim 248]" in out and "[dim 1]" in out
    assert out.endswith("total dimension 249")


def test_json_roundtrip(e6_tree):
    doc = render_json(e6_tree)
    back = parse_json(doc)
    assert back.node_count == e6_tree.node_count
    assert back.aggregate == e6_tree.aggregate
    assert (sorted(l for l, _ in back.root.walk())
            == sorted(l for l, _ in e6_tree.root.walk()))
    assert render_json(back) == doc
