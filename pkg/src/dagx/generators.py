"""Constructors for extremal, exhaustive, and random DAG instances.

Enumeration is over labeled forward edge sets: every subset of
{(i, j) : i < j} is one graph, indexed by the integer whose bits select
pairs from :func:`pair_table`. Every DAG is isomorphic to at least one
enumerated graph (relabel along a topological order), so universal
isomorphism-invariant claims are fully covered without deduplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

import numpy as np

from .errors import InvalidParamsError, LimitExceededError
from .graph import Dag, Edge, bits

MAX_ENUM_VERTICES = 7

_PAIR_CACHE: dict[int, tuple[Edge, ...]] = {}


def pair_table(n: int) -> tuple[Edge, ...]:
    """All pairs (u, v) with u < v < n, lexicographic; bit i <-> pair i."""
    table = _PAIR_CACHE.get(n)
    if table is None:
        table = tuple((u, v) for u in range(n) for v in range(u + 1, n))
        _PAIR_CACHE[n] = table
    return table


def dag_count(n: int) -> int:
    """Number of enumerated graphs on n vertices: 2^C(n, 2)."""
    return 1 << comb(n, 2)


def dag_from_index(n: int, index: int) -> Dag:
    """The enumerated graph whose edge set is the bit pattern of ``index``."""
    pairs = pair_table(n)
    if not 0 <= index < dag_count(n):
        raise InvalidParamsError(f"index {index} outside 0..{dag_count(n) - 1}")
    return Dag._unchecked(n, frozenset(pairs[i] for i in bits(index)))


def enumerate_dags(
    n: int,
    start: int = 0,
    stop: int | None = None,
    max_vertices: int = MAX_ENUM_VERTICES,
) -> Iterator[Dag]:
    """Stream every forward-labeled DAG on n vertices, in index order.

    ``start``/``stop`` select an index sub-range so workers can partition
    the enumeration. Raises :class:`~dagx.errors.LimitExceededError` when
    n exceeds ``max_vertices``.
    """
    if n > max_vertices:
        raise LimitExceededError(f"enumeration of n={n} exceeds the ceiling {max_vertices}")
    pairs = pair_table(n)
    total = dag_count(n)
    stop = total if stop is None else min(stop, total)
    for index in range(max(start, 0), stop):
        yield Dag._unchecked(n, frozenset(pairs[i] for i in bits(index)))


def turan_dag(n: int, k: int) -> Dag:
    """Balanced complete k-partite graph, edges oriented low part to high part."""
    from .bounds import balanced_parts

    parts = balanced_parts(n, k)
    ids: list[list[int]] = []
    nxt = 0
    for size in parts:
        ids.append(list(range(nxt, nxt + size)))
        nxt += size
    edges = set()
    for i in range(k):
        for j in range(i + 1, k):
            for u in ids[i]:
                for v in ids[j]:
                    edges.add((u, v))
    return Dag._unchecked(n, frozenset(edges))


@dataclass(frozen=True)
class ExtremalSpec:
    """Parameters of the three-layer extremal graph.

    r source vertices, l - 1 chained middle vertices, s sink vertices.
    """

    r: int
    l: int
    s: int

    def __post_init__(self) -> None:
        if self.r < 1 or self.s < 0 or self.l < 2:
            raise InvalidParamsError(f"need r >= 1, l >= 2, s >= 0, got {self}")

    @property
    def vertex_count(self) -> int:
        return self.r + self.l - 1 + self.s

    @property
    def edge_count(self) -> int:
        r, l, s = self.r, self.l, self.s
        return r * (l - 1) + comb(l - 1, 2) + (l - 1) * s + r * s


def extremal_dag(spec: ExtremalSpec) -> Dag:
    """Build the three-layer graph: sources x, chained middles y, sinks z.

    Vertices are numbered x block first (0..r-1), then y (r..r+l-2),
    then z. Edges: every x->y, every x->z, every y->z, and y_i->y_j for
    i < j. The result is transitive and extremely reduced; its longest
    path has length l whenever s >= 1.
    """
    r, l, s = spec.r, spec.l, spec.s
    xs = range(r)
    ys = range(r, r + l - 1)
    zs = range(r + l - 1, r + l - 1 + s)
    edges = set()
    for x in xs:
        for y in ys:
            edges.add((x, y))
        for z in zs:
            edges.add((x, z))
    ylist = list(ys)
    for i, yi in enumerate(ylist):
        for yj in ylist[i + 1:]:
            edges.add((yi, yj))
        for z in zs:
            edges.add((yi, z))
    return Dag._unchecked(spec.vertex_count, frozenset(edges))


def extremal_for(n: int, ell: int) -> Dag:
    """The edge-maximal reduced DAG on n vertices with longest path ``ell``.

    Splits the n - ell + 1 non-middle vertices as evenly as possible
    between the source and sink layers, which makes the edge count hit
    the closed-form bound exactly. Requires ell >= 2 (for ell == 1 the
    oriented bipartite Turan graph ``turan_dag(n, 2)`` is the extremal
    instance).
    """
    if ell < 2:
        raise InvalidParamsError(f"need ell >= 2 (use turan_dag(n, 2) for ell == 1), got {ell}")
    if n < ell + 1:
        raise InvalidParamsError(f"need n >= ell + 1, got n={n}, ell={ell}")
    m = n - ell + 1
    return extremal_dag(ExtremalSpec(r=(m + 1) // 2, l=ell, s=m // 2))


def random_dag(n: int, p: float, seed) -> Dag:
    """Forward-labeled random DAG: each pair (u, v), u < v, kept with probability p.

    Deterministic for a fixed ``seed`` (anything accepted by
    ``numpy.random.default_rng``, e.g. an int or a tuple of ints, so
    sharded callers can derive independent per-index streams).
    """
    if not 0 <= p <= 1:
        raise InvalidParamsError(f"edge probability must be in [0, 1], got {p}")
    if n < 1:
        raise InvalidParamsError(f"vertex count must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    pairs = pair_table(n)
    if not pairs:
        return Dag._unchecked(n, frozenset())
    keep = rng.random(len(pairs)) < p
    return Dag._unchecked(n, frozenset(pr for pr, k in zip(pairs, keep) if k))
