"""Randomized invariants via hypothesis; the bulk randomized suite backing
the acceptance gate lives in test_acceptance.py."""

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from krdecomp.oracle import binom, full_decomposition_oracle, partitions_of
from krdecomp.rootsystem import (
    alpha_to_omega,
    dominant_weights_below,
    omega_to_alpha,
    root_system,
    weyl_dimension,
)
from krdecomp.tree import build_tree

SMALL_ALGEBRAS = ["A1", "A2", "A3", "A4", "D3", "D4", "D5", "E6"]
TINY_ALGEBRAS = ["A1", "A2", "A3", "D3", "D4"]


@given(st.integers(-20, 40), st.integers(-5, 20))
def test_binom_convention(a, b):
    if b < 0 or (b > 0 and a < b):
        assert binom(a, b) == 0
    elif b == 0:
        assert binom(a, b) == 1
    else:
        assert binom(a, b) == math.comb(a, b)


@given(st.integers(0, 25))
def test_partitions_sound(n):
    parts = partitions_of(n)
    assert len(set(parts)) == len(parts)
    for p in parts:
        assert sum(p) == n
        assert list(p) == sorted(p, reverse=True)
        assert all(x >= 1 for x in p)


@given(st.sampled_from(SMALL_ALGEBRAS), st.data())
def test_basis_conversion_roundtrip(name, data):
    rs = root_system(name)
    v = tuple(data.draw(st.integers(-6, 6)) for _ in range(rs.rank))
    assert omega_to_alpha(rs, alpha_to_omega(rs, v)) == v


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_ALGEBRAS), st.data())
def test_dominant_weights_below_closed(name, data):
    rs = root_system(name)
    w = tuple(data.draw(st.integers(0, 2)) for _ in range(rs.rank))
    below = dominant_weights_below(rs, w)
    assert w in below
    for mu in below:
        assert all(x >= 0 for x in mu)
        d = omega_to_alpha(rs, tuple(a - b for a, b in zip(w, mu)))
        assert all(isinstance(x, int) and x >= 0 for x in d)


@given(st.sampled_from(SMALL_ALGEBRAS), st.data())
def test_weyl_dimension_positive_and_monotone_in_scale(name, data):
    rs = root_system(name)
    w = tuple(data.draw(st.integers(0, 3)) for _ in range(rs.rank))
    d1 = weyl_dimension(rs, w)
    d2 = weyl_dimension(rs, tuple(2 * x for x in w))
    assert d1 >= 1
    assert d2 >= d1


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(TINY_ALGEBRAS), st.data())
def test_tree_agrees_with_oracle(name, data):
    rs = root_system(name)
    ell = data.draw(st.integers(1, rs.rank))
    m = data.draw(st.integers(0, 2))
    tree = build_tree(rs, ell, m)
    assert tree.aggregate == full_decomposition_oracle(rs, ell, m)
