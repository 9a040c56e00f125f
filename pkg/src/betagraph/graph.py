"""Adjacency-array graphs with probe accounting.

Two storage flavours share one access contract:

* :class:`Graph` keeps a CSR layout (``offsets`` / ``neighbors``).
* :class:`CompleteMinusMatching` is K_n with an optional set of disjoint
  pairs removed.  Its i-th neighbor is computed arithmetically, so dense
  members of the lower-bound family can be probed at n in the tens of
  thousands without materializing n^2 entries.

Counted access goes through :meth:`degree` and :meth:`neighbor`, which take an
optional :class:`ProbeCounter`.  ``deg``/``nbr`` are the unchecked, uncounted
fast paths used inside the algorithms (which tally their probes locally and
flush them into the counter once).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Malformed graph file; ``lineno`` is 1-based (0 when not line-specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno else ""
        super().__init__(prefix + message)


@dataclass
class ProbeCounter:
    degree_probes: int = 0
    neighbor_probes: int = 0

    @property
    def total(self) -> int:
        return self.degree_probes + self.neighbor_probes

    def reset(self) -> None:
        self.degree_probes = 0
        self.neighbor_probes = 0

    def add(self, degree: int = 0, neighbor: int = 0) -> None:
        self.degree_probes += degree
        self.neighbor_probes += neighbor


class AdjacencyArray:
    """Common probe interface; subclasses provide ``n``, ``m``, ``deg`` and ``nbr``."""

    n: int
    m: int

    def deg(self, v: int) -> int:  # pragma: no cover - abstract
        raise NotImplementedError

    def nbr(self, v: int, i: int) -> int:  # pragma: no cover - abstract
        raise NotImplementedError

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range [0, {self.n})")

    def degree(self, v: int, pc: ProbeCounter | None = None) -> int:
        self._check_vertex(v)
        if pc is not None:
            pc.degree_probes += 1
        return self.deg(v)

    def neighbor(self, v: int, i: int, pc: ProbeCounter | None = None) -> int:
        self._check_vertex(v)
        d = self.deg(v)
        if not 0 <= i < d:
            raise IndexError(f"neighbor index {i} out of range for vertex {v} of degree {d}")
        if pc is not None:
            pc.neighbor_probes += 1
        return self.nbr(v, i)

    # Uncounted whole-graph views, for oracles and I/O only.

    def neighbor_list(self, v: int) -> list[int]:
        return [self.nbr(v, i) for i in range(self.deg(v))]

    def adjacency_lists(self) -> list[list[int]]:
        return [self.neighbor_list(v) for v in range(self.n)]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in ascending lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.neighbor_list(u)):
                if u < v:
                    yield (u, v)

    def degrees(self) -> list[int]:
        return [self.deg(v) for v in range(self.n)]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def adjacency_masks(self) -> list[int]:
        """Neighborhoods as Python-int bitsets (small graphs)."""
        masks = []
        for v in range(self.n):
            mask = 0
            for u in self.neighbor_list(v):
                mask |= 1 << u
            masks.append(mask)
        return masks

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_list(u)

    def validate(self) -> None:
        """Raise ValueError unless the graph is simple and symmetric."""
        adj = [set() for _ in range(self.n)]
        total = 0
        for v in range(self.n):
            lst = self.neighbor_list(v)
            s = set(lst)
            if len(s) != len(lst):
                raise ValueError(f"vertex {v} has a repeated neighbor")
            if v in s:
                raise ValueError(f"vertex {v} has a self-loop")
            for u in s:
                if not 0 <= u < self.n:
                    raise ValueError(f"vertex {v} lists out-of-range neighbor {u}")
            adj[v] = s
            total += len(lst)
        for v in range(self.n):
            for u in adj[v]:
                if v not in adj[u]:
                    raise ValueError(f"edge ({v},{u}) is not symmetric")
        if total != 2 * self.m:
            raise ValueError(f"degree sum {total} != 2m = {2 * self.m}")

    def to_csr(self) -> "Graph":
        return Graph.from_adjacency(self.adjacency_lists())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdjacencyArray):
            return NotImplemented
        if self.n != other.n or self.m != other.m:
            return False
        return all(self.neighbor_list(v) == other.neighbor_list(v) for v in range(self.n))

    __hash__ = None  # type: ignore[assignment]


class Graph(AdjacencyArray):
    """Immutable CSR graph.  Slices of ``neighbors`` hold each vertex's adjacency array."""

    def __init__(self, offsets, neighbors, *, check: bool = True):
        self.offsets = np.asarray(offsets, dtype=np.int64)
        self.neighbors = np.asarray(neighbors, dtype=np.int64)
        self.offsets.setflags(write=False)
        self.neighbors.setflags(write=False)
        if self.offsets.ndim != 1 or len(self.offsets) < 1:
            raise ValueError("offsets must be a 1-d sequence of length n+1")
        self.n = len(self.offsets) - 1
        if check:
            if self.offsets[0] != 0 or self.offsets[-1] != len(self.neighbors):
                raise ValueError("offsets must start at 0 and end at len(neighbors)")
            if self.n and np.any(np.diff(self.offsets) < 0):
                raise ValueError("offsets must be nondecreasing")
            if len(self.neighbors) % 2:
                raise ValueError("neighbor array length must be even (2m)")
        self.m = len(self.neighbors) // 2
        # python-int mirrors for the hot loops; numpy scalar indexing is slow
        self._off = self.offsets.tolist()
        self._nb = self.neighbors.tolist()

    def deg(self, v: int) -> int:
        return self._off[v + 1] - self._off[v]

    def nbr(self, v: int, i: int) -> int:
        return self._nb[self._off[v] + i]

    def neighbor_list(self, v: int) -> list[int]:
        return self._nb[self._off[v] : self._off[v + 1]]

    def degrees(self) -> list[int]:
        return np.diff(self.offsets).tolist()

    def edges(self) -> Iterator[tuple[int, int]]:
        if self.m == 0:
            return iter(())
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.offsets))
        keep = src < self.neighbors
        u, v = src[keep], self.neighbors[keep]
        order = np.lexsort((v, u))
        return zip(u[order].tolist(), v[order].tolist())

    def to_csr(self) -> "Graph":
        return self

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @classmethod
    def from_adjacency(cls, lists: Sequence[Sequence[int]]) -> "Graph":
        """Build from explicit adjacency arrays, keeping each array's order."""
        offsets = [0]
        flat: list[int] = []
        for lst in lists:
            flat.extend(int(x) for x in lst)
            offsets.append(len(flat))
        g = cls(offsets, flat)
        g.validate()
        return g


def from_edge_list(edges: Iterable[tuple[int, int]], n: int) -> Graph:
    """Simple undirected graph on ``n`` vertices; duplicates are merged.

    Neighbor slices come out in ascending vertex-id order.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    if arr.size == 0:
        return Graph(np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int64))
    arr = arr.reshape(-1, 2)
    if arr.min() < 0 or arr.max() >= n:
        bad = arr[(arr < 0).any(axis=1) | (arr >= n).any(axis=1)][0]
        raise ValueError(f"edge ({bad[0]},{bad[1]}) has an endpoint outside [0, {n})")
    loops = arr[:, 0] == arr[:, 1]
    if loops.any():
        v = int(arr[loops][0, 0])
        raise ValueError(f"self-loop at vertex {v}")
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    canon = np.unique(lo * n + hi)
    lo, hi = canon // n, canon % n
    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    counts = np.bincount(src, minlength=n)
    offsets = np.concatenate([[0], np.cumsum(counts)])
    return Graph(offsets, dst, check=False)


class CompleteMinusMatching(AdjacencyArray):
    """K_n minus a set of vertex-disjoint pairs, with ascending adjacency arrays.

    ``mate[v]`` is the removed partner of ``v`` or ``-1``.  With every vertex
    paired this is a member of the clique-minus-perfect-matching family; with
    no pairs it is K_n.
    """

    def __init__(self, n: int, mate: Sequence[int] | None = None):
        if n < 0:
            raise ValueError("n must be nonnegative")
        self.n = n
        if mate is None:
            mate = [-1] * n
        mate = [int(x) for x in mate]
        if len(mate) != n:
            raise ValueError("mate must have length n")
        for v, w in enumerate(mate):
            if w == -1:
                continue
            if not 0 <= w < n or w == v or mate[w] != v:
                raise ValueError(f"mate is not a symmetric matching at vertex {v}")
        self.mate = mate
        paired = sum(1 for w in mate if w >= 0)
        self.m = n * (n - 1) // 2 - paired // 2
        # per-vertex (low, high) of the two skipped ids {v, mate[v]}
        self._lo = [min(v, w) if w >= 0 else v for v, w in enumerate(mate)]
        self._hi = [max(v, w) if w >= 0 else n for v, w in enumerate(mate)]
        self._deg = [n - 2 if w >= 0 else n - 1 for w in mate]

    def deg(self, v: int) -> int:
        return self._deg[v]

    def nbr(self, v: int, i: int) -> int:
        if i >= self._lo[v]:
            i += 1
            if i >= self._hi[v]:
                i += 1
        return i

    def neighbor_list(self, v: int) -> list[int]:
        lo, hi = self._lo[v], self._hi[v]
        return [u for u in range(self.n) if u != lo and u != hi]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and self.mate[u] != v

    def removed_pairs(self) -> list[tuple[int, int]]:
        return [(v, w) for v, w in enumerate(self.mate) if v < w]

    def __repr__(self) -> str:
        return f"CompleteMinusMatching(n={self.n}, removed={len(self.removed_pairs())})"


def write_graph(g: AdjacencyArray, path: str | os.PathLike) -> None:
    """Text format: ``n m`` header, then one ``u v`` line per edge with u < v."""
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"{g.n} {g.m}\n")
        for u, v in g.edges():
            f.write(f"{u} {v}\n")


def read_graph(path: str | os.PathLike) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None
            if header is None:
                if a < 0 or b < 0:
                    raise GraphFormatError("negative n or m in header", lineno)
                header = (a, b)
                continue
            if a == b:
                raise GraphFormatError(f"self-loop at vertex {a}", lineno)
            if not (0 <= a < header[0] and 0 <= b < header[0]):
                raise GraphFormatError(f"endpoint out of range [0, {header[0]})", lineno)
            edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header declares m={m} but file has {len(edges)} edge lines")
    return from_edge_list(edges, n)
