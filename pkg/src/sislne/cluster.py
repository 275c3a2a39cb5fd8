"""Combinatorial blow-ups of a smooth surface point.

A :class:`Cluster` records a finite sequence of point blow-ups starting from
the origin of C^2. Point ``i`` creates the exceptional divisor ``E_i``; point 0
is the origin and ``E_0`` is the root. A later point sits either at a generic
(free) point of one divisor or at the (satellite) intersection of two
divisors, and is *proximate* to exactly those divisors.

Every decoration is computed twice: once from the blow-up bookkeeping
(parent sums for ``m``, Noether's formula with the proximity recursion for
``q``) and once from the intersection matrix. :func:`check_oracles` insists
that both agree.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence


class ClusterError(ValueError):
    pass


@dataclass(frozen=True)
class Cluster:
    """Persistent cluster; each blow-up returns a new value."""

    parents: tuple[tuple[int, ...], ...] = ((),)
    edges: frozenset = field(default_factory=frozenset)
    tags: tuple[str, ...] = ("root",)

    @property
    def size(self) -> int:
        return len(self.parents)

    def divisors(self) -> range:
        return range(self.size)

    def adjacent(self, a: int, b: int) -> bool:
        return frozenset((a, b)) in self.edges

    def neighbours(self, v: int) -> list[int]:
        out = []
        for e in self.edges:
            if v in e:
                (u,) = tuple(e - {v})
                out.append(u)
        return sorted(out)

    def is_satellite(self, i: int) -> bool:
        return len(self.parents[i]) == 2

    def proximate_to(self, i: int) -> tuple[int, ...]:
        """Earlier points whose divisors contain point ``i``."""
        return self.parents[i]

    def euler_weight(self, v: int) -> int:
        later = sum(1 for i in range(v + 1, self.size) if v in self.parents[i])
        return -1 - later

    def weights(self) -> list[int]:
        return [self.euler_weight(v) for v in self.divisors()]

    def multiplicities(self) -> list[int]:
        """m of a generic linear form along each divisor (parent sums)."""
        m = [1]
        for i in range(1, self.size):
            m.append(sum(m[p] for p in self.parents[i]))
        return m

    def _check_divisor(self, v: int) -> None:
        if not 0 <= v < self.size:
            raise ClusterError(f"no divisor E_{v} in a cluster of {self.size} points")

    def blow_up_free(self, divisor: int, tag: str = "") -> "Cluster":
        self._check_divisor(divisor)
        new = self.size
        return Cluster(
            self.parents + ((divisor,),),
            self.edges | {frozenset((divisor, new))},
            self.tags + (tag,),
        )

    def blow_up_satellite(self, d1: int, d2: int, tag: str = "") -> "Cluster":
        self._check_divisor(d1)
        self._check_divisor(d2)
        if d1 == d2 or not self.adjacent(d1, d2):
            raise ClusterError(f"E_{d1} and E_{d2} do not meet")
        new = self.size
        edges = (self.edges - {frozenset((d1, d2))}) | {
            frozenset((d1, new)),
            frozenset((d2, new)),
        }
        return Cluster(self.parents + (tuple(sorted((d1, d2))),), frozenset(edges), self.tags + (tag,))

    def with_tag(self, v: int, tag: str) -> "Cluster":
        tags = list(self.tags)
        tags[v] = tag
        return Cluster(self.parents, self.edges, tuple(tags))


def curvette_multiplicities(cluster: Cluster, v: int) -> list[int]:
    """Multiplicities at points 0..v of a curvette of E_v.

    Reverse proximity recursion: 1 at the point creating E_v, and at an
    earlier point the sum over the later points (up to v) proximate to it.
    """
    cluster._check_divisor(v)
    c = [0] * (v + 1)
    c[v] = 1
    for p in range(v - 1, -1, -1):
        c[p] = sum(c[i] for i in range(p + 1, v + 1) if p in cluster.parents[i])
    return c


def curvette_intersection(cluster: Cluster, v: int) -> int:
    """(gamma . gamma')_0 for curvettes of E_v at distinct points (Noether)."""
    return sum(c * c for c in curvette_multiplicities(cluster, v))


def inner_rate(cluster: Cluster, v: int) -> Fraction:
    c = curvette_multiplicities(cluster, v)
    return Fraction(sum(x * x for x in c), c[0] * c[0])


def bookkeeping(cluster: Cluster) -> tuple[list[int], list[Fraction]]:
    m = cluster.multiplicities()
    q = [inner_rate(cluster, v) for v in cluster.divisors()]
    return m, q


# -- intersection matrix --------------------------------------------------

def intersection_matrix(cluster: Cluster) -> list[list[int]]:
    n = cluster.size
    mat = [[0] * n for _ in range(n)]
    for v in range(n):
        mat[v][v] = cluster.euler_weight(v)
    for e in cluster.edges:
        a, b = tuple(e)
        mat[a][b] = mat[b][a] = 1
    return mat


def ldl_pivots(mat: Sequence[Sequence[int]]) -> list[Fraction]:
    """Pivots of symmetric elimination without row exchanges.

    A symmetric matrix is negative definite iff all of them are negative;
    elimination stops at the first nonnegative pivot.
    """
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    pivots = []
    for k in range(n):
        p = a[k][k]
        pivots.append(p)
        if p >= 0:
            break
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
    return pivots


def is_negative_definite(mat: Sequence[Sequence[int]]) -> bool:
    piv = ldl_pivots(mat)
    return len(piv) == len(mat) and all(p < 0 for p in piv)


def invert(mat: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse over Q."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ClusterError("singular intersection matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def matrix_oracle(cluster: Cluster, root: int = 0) -> tuple[list[Fraction], list[Fraction]]:
    """m and q read off the inverse intersection matrix.

    The total transform of a generic line meets only the root, so
    ``I m = -e_root``; a curvette of E_v gives ``I c = -e_v`` and
    ``(gamma . gamma') = -(I^-1)_{vv}``.
    """
    mat = intersection_matrix(cluster)
    if not is_negative_definite(mat):
        raise ClusterError("intersection matrix is not negative definite")
    inv = invert(mat)
    m = [-inv[v][root] for v in cluster.divisors()]
    q = [-inv[v][v] / (m[v] * m[v]) for v in cluster.divisors()]
    return m, q


def check_oracles(cluster: Cluster) -> bool:
    m1, q1 = bookkeeping(cluster)
    m2, q2 = matrix_oracle(cluster)
    return [Fraction(x) for x in m1] == m2 and q1 == q2


# -- standard sequences ---------------------------------------------------

def cusp_cluster(k: int, base: Cluster | None = None) -> tuple[Cluster, int, list[int]]:
    """Minimal resolution of a (k, k+1)-cusp tangent to a generic direction.

    Returns (cluster, delta divisor, string divisors). The free step sits on
    the root; each following step is the satellite point root ^ E_last.
    """
    if k < 2:
        raise ClusterError("a (k, k+1)-cusp needs k >= 2")
    cl = base if base is not None else Cluster()
    cl = cl.blow_up_free(0, "string")
    chain = [cl.size - 1]
    for _ in range(k - 1):
        cl = cl.blow_up_satellite(0, chain[-1], "string")
        chain.append(cl.size - 1)
    delta = chain[-1]
    cl = cl.with_tag(delta, "delta")
    return cl, delta, chain[:-1]


def random_cluster(rng: random.Random, points: int) -> Cluster:
    """Random blow-up sequence with ``points`` points (the origin included)."""
    cl = Cluster()
    while cl.size < points:
        if cl.edges and rng.random() < 0.5:
            a, b = sorted(rng.choice(sorted(tuple(sorted(e)) for e in cl.edges)))
            cl = cl.blow_up_satellite(a, b)
        else:
            cl = cl.blow_up_free(rng.randrange(cl.size))
    return cl
