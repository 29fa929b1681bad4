"""Simply-laced root system arithmetic in Bourbaki numbering.

Weights are tuples of coordinates in the fundamental-weight (omega) basis;
root vectors are tuples in the simple-root (alpha) basis.  All arithmetic
is exact: integers where possible, fractions.Fraction otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Coord = tuple  # length-r tuple of int or Fraction

_VALID_E_RANKS = (6, 7, 8)


class InvalidAlgebraError(ValueError):
    pass


class NonDominantError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraId:
    family: str  # 'A', 'D' or 'E'
    rank: int

    def __post_init__(self):
        if self.family == "A":
            ok = self.rank >= 1
        elif self.family == "D":
            ok = self.rank >= 3
        elif self.family == "E":
            ok = self.rank in _VALID_E_RANKS
        else:
            ok = False
        if not ok:
            raise InvalidAlgebraError(f"not a simply-laced type: {self.family}{self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, name: str) -> "AlgebraId":
        name = name.strip()
        if len(name) < 2 or name[0].upper() not in "ADE" or not name[1:].isdigit():
            raise InvalidAlgebraError(f"cannot parse algebra name {name!r}")
        return cls(name[0].upper(), int(name[1:]))


def _dynkin_edges(aid: AlgebraId):
    """Bourbaki Dynkin diagram as a list of (i, j) edges, 1-based."""
    r = aid.rank
    if aid.family == "A":
        return [(i, i + 1) for i in range(1, r)]
    if aid.family == "D":
        return [(i, i + 1) for i in range(1, r - 1)] + [(r - 2, r)]
    # E series: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4
    edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
    if r >= 7:
        edges.append((6, 7))
    if r == 8:
        edges.append((7, 8))
    return edges


def _invert_rational(mat):
    """Invert a square integer matrix exactly via Gauss-Jordan over Fraction."""
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(row for row in range(col, n) if a[row][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for row in range(n):
            if row != col and a[row][col] != 0:
                f = a[row][col]
                a[row] = [x - f * y for x, y in zip(a[row], a[col])]
    return tuple(tuple(a[i][n + j] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class RootSystem:
    id: AlgebraId
    cartan: tuple            # r x r, rows of ints
    inv_cartan: tuple        # r x r, rows of Fractions
    positive_roots: tuple    # alpha-coordinate tuples, sorted by (height, lex)
    rho: tuple               # all-ones weight

    @property
    def rank(self):
        return self.id.rank

    def __repr__(self):
        return f"RootSystem({self.id})"


def _positive_roots(cartan, r):
    """Closure of the simple roots: beta + alpha_i is a root iff the
    alpha_i-string through beta extends upward (p - <beta, alpha_i> > 0)."""
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(r):
                pairing = sum(cartan[i][j] * beta[j] for j in range(r))
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        new.append(up)
        frontier = new
    return tuple(sorted(roots, key=lambda v: (sum(v), v)))


@lru_cache(maxsize=None)
def build_root_system(aid: AlgebraId) -> RootSystem:
    r = aid.rank
    adj = set()
    for i, j in _dynkin_edges(aid):
        adj.add((i - 1, j - 1))
        adj.add((j - 1, i - 1))
    cartan = tuple(
        tuple(2 if i == j else (-1 if (i, j) in adj else 0) for j in range(r))
        for i in range(r)
    )
    return RootSystem(
        id=aid,
        cartan=cartan,
        inv_cartan=_invert_rational(cartan),
        positive_roots=_positive_roots(cartan, r),
        rho=(1,) * r,
    )


def root_system(name) -> RootSystem:
    if isinstance(name, RootSystem):
        return name
    if isinstance(name, AlgebraId):
        return build_root_system(name)
    return build_root_system(AlgebraId.parse(name))


# -- basis conversions ------------------------------------------------------

def alpha_to_omega(rs: RootSystem, v) -> tuple:
    """omega-coordinates of sum(v_j alpha_j); multiplication by the Cartan matrix."""
    if len(v) != rs.rank:
        raise ValueError("length mismatch")
    return tuple(sum(rs.cartan[i][j] * v[j] for j in range(rs.rank)) for i in range(rs.rank))


def omega_to_alpha(rs: RootSystem, w) -> tuple:
    """alpha-coordinates (exact rationals, ints when integral) of a weight."""
    if len(w) != rs.rank:
        raise ValueError("length mismatch")
    out = []
    for i in range(rs.rank):
        x = sum(rs.inv_cartan[i][j] * w[j] for j in range(rs.rank))
        out.append(int(x) if x.denominator == 1 else x)
    return tuple(out)


def fundamental_weight(rs: RootSystem, k: int) -> tuple:
    """omega_k as an omega-coordinate vector (1-based k)."""
    if not 1 <= k <= rs.rank:
        raise ValueError(f"node index {k} out of range for {rs.id}")
    return tuple(int(i == k - 1) for i in range(rs.rank))


# -- predicates and pairings ------------------------------------------------

def is_dominant(w) -> bool:
    return all(x >= 0 for x in w)


def in_positive_root_lattice(v) -> bool:
    return all(isinstance(x, int) and x >= 0 for x in v) and any(v)


def is_integral(v) -> bool:
    return all(isinstance(x, int) for x in v)


def height(v):
    return sum(v)


def inner(w, v):
    """Pairing of a weight (omega basis) with a root vector (alpha basis).

    <omega_i, alpha_j> = delta_ij in the simply-laced normalization, so this
    is a plain dot product."""
    return sum(a * b for a, b in zip(w, v))


def weight_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def weight_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def weight_scale(c, a):
    return tuple(c * x for x in a)


# -- Weyl dimension formula -------------------------------------------------

def weyl_dimension(rs: RootSystem, w) -> int:
    """dim of the irreducible with highest weight w:
    prod over positive roots of <w+rho, alpha> / <rho, alpha>."""
    if not is_dominant(w):
        raise NonDominantError(f"weight {w} is not dominant")
    wr = weight_add(w, rs.rho)
    num = math.prod(inner(wr, a) for a in rs.positive_roots)
    den = math.prod(sum(a) for a in rs.positive_roots)
    q, rem = divmod(num, den)
    assert rem == 0
    return q


# -- the dominance order ----------------------------------------------------

def dominant_weights_below(rs: RootSystem, w) -> list:
    """All dominant mu with w - mu a nonnegative integer root combination.

    BFS subtracting positive roots, staying inside the dominant chamber;
    complete because any dominant mu <= w is joined to w by such a chain."""
    if not is_dominant(w):
        raise NonDominantError(f"weight {w} is not dominant")
    pos_w = [alpha_to_omega(rs, a) for a in rs.positive_roots]
    seen = {tuple(w)}
    frontier = [tuple(w)]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in pos_w:
                cand = weight_sub(mu, a)
                if cand not in seen and is_dominant(cand):
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return sorted(seen)
