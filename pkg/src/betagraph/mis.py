"""Deterministic greedy maximal independent set with neighbor marking."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import AdjacencyArray, ProbeCounter


@dataclass
class VertexSet:
    members: list[int]
    indicator: list[bool]

    @classmethod
    def from_members(cls, members: Iterable[int], n: int) -> "VertexSet":
        members = list(members)
        indicator = [False] * n
        for v in members:
            if indicator[v]:
                raise ValueError(f"vertex {v} listed twice")
            indicator[v] = True
        return cls(members, indicator)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return self.indicator[v]

    def __iter__(self):
        return iter(self.members)


@dataclass
class MisStats:
    marks_set: int = 0
    vertices_scanned: int = 0
    degree_probes: int = 0
    neighbor_probes: int = 0
    order: str = field(default="identity")

    @property
    def work(self) -> int:
        return self.vertices_scanned + self.marks_set


def _check_order(order: Sequence[int], n: int) -> list[int]:
    order = [int(v) for v in order]
    if len(order) != n or sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of 0..n-1")
    return order


def greedy_mis(
    g: AdjacencyArray,
    order: Sequence[int] | None = None,
    pc: ProbeCounter | None = None,
) -> tuple[VertexSet, MisStats]:
    """Scan vertices in ``order``; an unmarked vertex joins and marks its neighbors.

    Marked vertices are never expanded, so the neighbor probes total exactly
    the summed degree of the output set.
    """
    n = g.n
    order = list(range(n)) if order is None else _check_order(order, n)
    deg, nbr = g.deg, g.nbr
    mark = [False] * n
    members: list[int] = []
    marks_set = 0
    for v in order:
        if mark[v]:
            continue
        members.append(v)
        d = deg(v)
        for i in range(d):
            mark[nbr(v, i)] = True
        marks_set += d
    stats = MisStats(
        marks_set=marks_set,
        vertices_scanned=n,
        degree_probes=len(members),
        neighbor_probes=marks_set,
    )
    if pc is not None:
        pc.add(degree=stats.degree_probes, neighbor=stats.neighbor_probes)
    return VertexSet.from_members(members, n), stats


def degree_order(g: AdjacencyArray, pc: ProbeCounter | None = None) -> list[int]:
    """Vertices by nondecreasing degree, ties by id (counting sort)."""
    n = g.n
    degs = [g.deg(v) for v in range(n)]
    if pc is not None:
        pc.add(degree=n)
    buckets: list[list[int]] = [[] for _ in range(max(n, 1))]
    for v, d in enumerate(degs):
        buckets[d].append(v)
    return [v for bucket in buckets for v in bucket]


def caro_wei_mis(g: AdjacencyArray, pc: ProbeCounter | None = None) -> tuple[VertexSet, MisStats]:
    local = ProbeCounter()
    order = degree_order(g, local)
    result, stats = greedy_mis(g, order, local)
    stats.degree_probes = local.degree_probes
    stats.order = "caro-wei"
    if pc is not None:
        pc.add(degree=local.degree_probes, neighbor=local.neighbor_probes)
    return result, stats


def mis_work_bound(g: AdjacencyArray | int, beta: int) -> int:
    """Guaranteed ceiling n + n*beta on greedy MIS work when beta >= beta(g)."""
    n = g if isinstance(g, int) else g.n
    if beta < 0:
        raise ValueError("beta must be nonnegative")
    return n + n * beta
