from fractions import Fraction

import pytest

from krdecomp.rootsystem import (
    AlgebraId,
    InvalidAlgebraError,
    NonDominantError,
    alpha_to_omega,
    dominant_weights_below,
    fundamental_weight,
    inner,
    omega_to_alpha,
    root_system,
    weight_scale,
    weyl_dimension,
)


def test_algebra_validation():
    for bad in ("A0", "D2", "E5", "E9", "B3", "x", "7"):
        with pytest.raises(InvalidAlgebraError):
            AlgebraId.parse(bad)
    assert str(AlgebraId.parse("d4")) == "D4"


@pytest.mark.parametrize("name,count", [
    ("A1", 1), ("A3", 6), ("D3", 6), ("D4", 12),
    ("E6", 36), ("E7", 63), ("E8", 120),
])
def test_positive_root_counts(name, count):
    assert len(root_system(name).positive_roots) == count


def test_cartan_symmetric_and_a3_matches_d3():
    for name in ("A4", "D5", "E6", "E7", "E8"):
        c = root_system(name).cartan
        assert all(c[i][j] == c[j][i] for i in range(len(c)) for j in range(len(c)))
    # A3 and D3 are the same algebra up to node relabeling: same root count
    assert len(root_system("A3").positive_roots) == len(root_system("D3").positive_roots)


def test_basis_conversion_roundtrip():
    rs = root_system("E6")
    v = (2, 3, 4, 6, 4, 2)
    w = alpha_to_omega(rs, v)
    assert w == fundamental_weight(rs, 4)  # omega_4 lies in the root lattice
    assert omega_to_alpha(rs, w) == v


def test_omega_to_alpha_exact_fractions():
    rs = root_system("A2")
    a = omega_to_alpha(rs, (1, 0))
    assert a == (Fraction(2, 3), Fraction(1, 3))


@pytest.mark.parametrize("name,k,dim", [
    ("A2", 1, 3), ("A2", 2, 3), ("D4", 1, 8), ("D4", 2, 28),
    ("E6", 1, 27), ("E6", 2, 78), ("E6", 4, 2925),
    ("E7", 7, 56), ("E8", 8, 248),
])
def test_weyl_dimension_fundamentals(name, k, dim):
    rs = root_system(name)
    assert weyl_dimension(rs, fundamental_weight(rs, k)) == dim


def test_weyl_dimension_adjoint_and_zero():
    rs = root_system("A2")
    assert weyl_dimension(rs, (1, 1)) == 8
    assert weyl_dimension(rs, (0, 0)) == 1
    with pytest.raises(NonDominantError):
        weyl_dimension(rs, (1, -1))


def test_dominant_weights_below_adjoint():
    rs = root_system("A2")
    assert set(dominant_weights_below(rs, (1, 1))) == {(1, 1), (0, 0)}


def test_dominant_weights_below_all_dominant_and_comparable():
    rs = root_system("D4")
    top = weight_scale(2, fundamental_weight(rs, 1))
    got = dominant_weights_below(rs, top)
    assert tuple(top) in got
    for mu in got:
        assert all(x >= 0 for x in mu)
        d = omega_to_alpha(rs, tuple(a - b for a, b in zip(top, mu)))
        assert all(x >= 0 for x in d)


def test_inner_pairing():
    rs = root_system("E6")
    # <omega_i, alpha_j> = delta_ij
    for i in range(1, 7):
        w = fundamental_weight(rs, i)
        for j in range(1, 7):
            a = tuple(int(k == j - 1) for k in range(6))
            assert inner(w, a) == int(i == j)
