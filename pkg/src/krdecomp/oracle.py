"""Brute-force multiplicity oracle.

Evaluates the Kirillov-Reshetikhin multiplicity Z(l, m | n_1..n_r) literally,
as a sum over all tuples of partitions, one partition of n_k per node k.
Slow on purpose: this is the independent check for the tree algorithm.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .rootsystem import (
    RootSystem,
    dominant_weights_below,
    fundamental_weight,
    is_integral,
    omega_to_alpha,
    weight_scale,
    weight_sub,
)


class OracleScaleError(RuntimeError):
    """The partition-tuple search space exceeds the configured bound."""


DEFAULT_TUPLE_LIMIT = 10 ** 7


def binom(a: int, b: int) -> int:
    """Binomial with the convention binom(a, b) = 0 whenever a < b (so in
    particular for negative a and positive b), and binom(a, 0) = 1 always."""
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < b:
        return 0
    return math.comb(a, b)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n as descending part-tuples, descending-lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(n, largest):
        if n == 0:
            yield ()
            return
        for first in range(min(n, largest), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    return len(partitions_of(n))


@dataclass(frozen=True)
class MultiplicityQuery:
    rs: RootSystem
    ell: int
    m: int
    n: tuple  # length-r nonnegative integers; lambda = m*omega_ell - sum n_i alpha_i

    def __post_init__(self):
        if not 1 <= self.ell <= self.rs.rank:
            raise ValueError(f"ell={self.ell} out of range")
        if self.m < 0 or len(self.n) != self.rs.rank or any(x < 0 for x in self.n):
            raise ValueError("bad query")


def _boxes_in_first_columns(partition, n):
    # sum over parts of min(n, part): boxes in the first n columns
    return sum(part if part < n else n for part in partition)


def p_value(q: MultiplicityQuery, nu, k: int, n: int) -> int:
    """P^(k)_n for a tuple nu of partitions (1-based k, n >= 1)."""
    rs = q.rs
    total = min(n, q.m) if k == q.ell else 0
    for j in range(rs.rank):
        c = rs.cartan[j][k - 1]
        if c:
            total -= c * _boxes_in_first_columns(nu[j], n)
    return total


def _tuple_term(q: MultiplicityQuery, nu) -> int:
    """Product of binomials contributed by one partition tuple."""
    depth = max((p[0] for p in nu if p), default=0)
    term = 1
    for n in range(1, depth + 1):
        for k in range(1, q.rs.rank + 1):
            cnt = sum(1 for part in nu[k - 1] if part == n)
            if cnt == 0:
                continue
            term *= binom(p_value(q, nu, k, n) + cnt, cnt)
            if term == 0:
                return 0
    return term


def z_multiplicity(q: MultiplicityQuery, tuple_limit: int = DEFAULT_TUPLE_LIMIT) -> int:
    """Exact multiplicity of V_lambda, lambda = m*omega_ell - sum n_i alpha_i."""
    space = math.prod(partition_count(x) for x in q.n)
    if space > tuple_limit:
        raise OracleScaleError(
            f"oracle scale exceeded: {space} partition tuples > limit {tuple_limit}")
    total = 0
    for nu in itertools.product(*(partitions_of(x) for x in q.n)):
        total += _tuple_term(q, nu)
    return total


def full_decomposition_oracle(rs: RootSystem, ell: int, m: int,
                              tuple_limit: int = DEFAULT_TUPLE_LIMIT) -> dict:
    """Map dominant weight -> multiplicity over all dominant lambda <= m*omega_ell,
    zero entries omitted.  Desk-scale instances only (guarded)."""
    top = weight_scale(m, fundamental_weight(rs, ell))
    queries = []
    space = 0
    for mu in dominant_weights_below(rs, top):
        n_vec = omega_to_alpha(rs, weight_sub(top, mu))
        assert is_integral(n_vec)
        q = MultiplicityQuery(rs, ell, m, n_vec)
        queries.append((mu, q))
        space += math.prod(partition_count(x) for x in n_vec)
    if space > tuple_limit:
        raise OracleScaleError(
            f"oracle scale exceeded: {space} partition tuples > limit {tuple_limit}")
    out = {}
    for mu, q in queries:
        z = z_multiplicity(q, tuple_limit)
        if z:
            out[mu] = z
    return out
