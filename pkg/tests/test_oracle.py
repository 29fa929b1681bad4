import pytest

from krdecomp.oracle import (
    MultiplicityQuery,
    OracleScaleError,
    binom,
    full_decomposition_oracle,
    partition_count,
    partitions_of,
    z_multiplicity,
)
from krdecomp.rootsystem import root_system


def test_binom_conventions():
    assert binom(-1, 1) == 0
    assert binom(-5, 0) == 1
    assert binom(3, 0) == 1
    assert binom(2, 3) == 0
    assert binom(5, 2) == 10


def test_partitions():
    assert partitions_of(0) == ((),)
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partition_count(4) == 5
    assert partition_count(20) == 627


def test_query_validation():
    rs = root_system("A2")
    with pytest.raises(ValueError):
        MultiplicityQuery(rs, 3, 1, (0, 0))
    with pytest.raises(ValueError):
        MultiplicityQuery(rs, 1, -1, (0, 0))
    with pytest.raises(ValueError):
        MultiplicityQuery(rs, 1, 1, (0, -1))


def test_a_series_irreducible():
    # W_m(l) for type A is a single irreducible: z = 1 at the top, 0 below
    rs = root_system("A3")
    for ell in (1, 2, 3):
        for m in (1, 2):
            out = full_decomposition_oracle(rs, ell, m)
            top = tuple(m * int(i == ell - 1) for i in range(3))
            assert out == {top: 1}


def test_top_weight_multiplicity_one():
    rs = root_system("D4")
    q = MultiplicityQuery(rs, 2, 3, (0, 0, 0, 0))
    assert z_multiplicity(q) == 1


def test_known_interior_multiplicity():
    # W_2(4) for E6 contains V_{omega_4} twice in aggregate; the single
    # z-value at lambda = omega_4 is that total
    rs = root_system("E6")
    q = MultiplicityQuery(rs, 4, 2, (2, 3, 4, 6, 4, 2))
    assert z_multiplicity(q) == 2


def test_d4_spinor_node_chain():
    rs = root_system("D4")
    out = full_decomposition_oracle(rs, 2, 2)
    assert out == {(0, 2, 0, 0): 1, (0, 1, 0, 0): 1, (0, 0, 0, 0): 1}


def test_scale_guard():
    rs = root_system("E6")
    q = MultiplicityQuery(rs, 4, 2, (2, 3, 4, 6, 4, 2))
    with pytest.raises(OracleScaleError):
        z_multiplicity(q, tuple_limit=10)
