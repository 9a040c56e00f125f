"""Graph families with known or bounded neighborhood independence."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from .graph import AdjacencyArray, CompleteMinusMatching, Graph, from_edge_list

FAMILIES = (
    "line_graph",
    "hyper_line_graph",
    "clique",
    "clique_minus_pm",
    "unit_interval",
    "unit_disk",
    "er_random",
    "regular_bipartite",
    "hard_union",
)


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def line_graph(g: AdjacencyArray) -> Graph:
    """L(g): one vertex per edge of g (in canonical edge order), adjacent iff the edges touch."""
    edges = list(g.edges())
    if not edges:
        raise ValueError("line graph of an edgeless graph is undefined")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(edges):
        incident[u].append(idx)
        incident[v].append(idx)
    pairs = [p for inc in incident for p in combinations(inc, 2)]
    # two simple-graph edges share at most one endpoint, so pairs are distinct
    return from_edge_list(pairs, len(edges))


def hyper_line_graph(hyperedges: Sequence[Sequence[int]], r: int) -> Graph:
    sets = [frozenset(h) for h in hyperedges]
    for i, h in enumerate(sets):
        if len(h) > r:
            raise ValueError(f"hyperedge {i} has {len(h)} > r={r} vertices")
    touching: dict[int, list[int]] = {}
    for idx, h in enumerate(sets):
        for x in h:
            touching.setdefault(x, []).append(idx)
    pairs = {p for inc in touching.values() for p in combinations(inc, 2)}
    return from_edge_list(sorted(pairs), len(sets))


def random_hyper_line_graph(n: int, r: int, universe: int | None = None, seed=None) -> Graph:
    """Line graph of n random r-subsets of a ground set (beta <= r)."""
    rng = _rng(seed)
    if r < 1:
        raise ValueError("r must be at least 1")
    universe = universe if universe is not None else max(r, 2 * n)
    if universe < r:
        raise ValueError("universe must hold at least r elements")
    hyperedges = [rng.choice(universe, size=r, replace=False).tolist() for _ in range(n)]
    return hyper_line_graph(hyperedges, r)


def random_line_graph(n: int, avg_degree: float = 8.0, seed=None) -> Graph:
    """Line graph of a uniform random simple graph with exactly n edges.

    The base graph has about 2n/avg_degree vertices, so line-graph degrees
    hover near 2*avg_degree.
    """
    if n < 1:
        raise ValueError("a line graph needs at least one base edge")
    rng = _rng(seed)
    base_n = max(2, int(round(2 * n / avg_degree)))
    while base_n * (base_n - 1) // 2 < n:
        base_n += 1
    total = base_n * (base_n - 1) // 2
    idx = np.sort(rng.choice(total, size=n, replace=False))
    u, v = _triangle_decode(idx, base_n)
    base = from_edge_list(np.stack([u, v], axis=1), base_n)
    return line_graph(base)


def _triangle_decode(idx: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Map linear indices over pairs u < v (row-major) back to (u, v)."""
    idx = np.asarray(idx, dtype=np.int64)
    # row u starts at u*n - u*(u+1)/2 - 0; solve the quadratic then fix rounding
    b = 2 * n - 1
    u = np.floor((b - np.sqrt(b * b - 8.0 * idx)) / 2).astype(np.int64)
    start = u * n - u * (u + 1) // 2
    too_far = start > idx
    u[too_far] -= 1
    start = u * n - u * (u + 1) // 2
    nxt = (u + 1) * n - (u + 1) * (u + 2) // 2
    short = idx >= nxt
    u[short] += 1
    start = u * n - u * (u + 1) // 2
    v = idx - start + u + 1
    return u, v


def clique(n: int) -> CompleteMinusMatching:
    return CompleteMinusMatching(n)


def clique_minus_pm(n: int, seed=None) -> CompleteMinusMatching:
    """K_n minus the perfect matching (2i, 2i+1), or a random one when seeded."""
    if n % 2:
        raise ValueError("clique minus a perfect matching needs even n")
    if seed is None:
        mate = [v ^ 1 for v in range(n)]
    else:
        perm = _rng(seed).permutation(n).tolist()
        mate = [0] * n
        for i in range(0, n, 2):
            a, b = perm[i], perm[i + 1]
            mate[a], mate[b] = b, a
    return CompleteMinusMatching(n, mate)


def unit_interval(n: int, length: float = 1.0, window: float = 0.1, seed=None) -> Graph:
    """Points uniform on [0, length]; edge iff the points are within ``window``."""
    if window <= 0:
        raise ValueError("window must be positive")
    x = _rng(seed).uniform(0.0, length, size=n)
    order = np.argsort(x, kind="stable")
    xs = x[order]
    # for each sorted point, the furthest sorted index still in range
    reach = np.searchsorted(xs, xs + window, side="right")
    pairs = [
        (int(order[i]), int(order[j]))
        for i in range(n)
        for j in range(i + 1, int(reach[i]))
    ]
    return from_edge_list(pairs, n)


def unit_disk(n: int, side: float = 1.0, radius: float = 0.1, seed=None) -> Graph:
    if radius <= 0:
        raise ValueError("radius must be positive")
    pts = _rng(seed).uniform(0.0, side, size=(n, 2))
    pairs = cKDTree(pts).query_pairs(radius, output_type="ndarray") if n else np.zeros((0, 2))
    return from_edge_list(pairs, n)


def er_random(n: int, p: float, seed=None) -> Graph:
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = _rng(seed)
    total = n * (n - 1) // 2
    m = int(rng.binomial(total, p)) if total else 0
    idx = np.sort(rng.choice(total, size=m, replace=False)) if m else np.zeros(0, dtype=np.int64)
    u, v = _triangle_decode(idx, n)
    return from_edge_list(np.stack([u, v], axis=1), n)


def regular_bipartite(n_side: int, d: int, seed=None) -> Graph:
    """d-regular bipartite graph on left ids [0, n_side) and right ids [n_side, 2 n_side).

    Union of d edge-disjoint perfect matchings: left i meets right
    pi((sigma(i) + s) mod n_side) for each shift s in a random d-subset.
    """
    if d < 0 or d > n_side:
        raise ValueError("need 0 <= d <= n_side")
    rng = _rng(seed)
    left = rng.permutation(n_side)
    right = rng.permutation(n_side)
    shifts = rng.choice(n_side, size=d, replace=False) if d else []
    pairs = [
        (i, n_side + int(right[(int(left[i]) + int(s)) % n_side]))
        for s in shifts
        for i in range(n_side)
    ]
    return from_edge_list(pairs, 2 * n_side)


def hard_union(t: int, part_size: int, seed=None) -> Graph:
    """Disjoint union of t cliques-minus-perfect-matching, each with its own random matching."""
    if part_size % 2:
        raise ValueError("part_size must be even")
    if t < 0:
        raise ValueError("t must be nonnegative")
    rng = _rng(seed)
    pairs = []
    for p in range(t):
        base = p * part_size
        part = clique_minus_pm(part_size, seed=rng)
        pairs.extend((base + u, base + v) for u, v in part.edges())
    return from_edge_list(pairs, t * part_size)


# --- family dispatch --------------------------------------------------------


@dataclass
class GenSpec:
    family: str
    n: int
    params: dict = field(default_factory=dict)
    seed: int | None = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        allowed = _PARAMS[self.family]
        extra = set(self.params) - set(allowed)
        if extra:
            raise ValueError(f"family {self.family} does not take {sorted(extra)}")

    def with_n(self, n: int, seed=None) -> "GenSpec":
        return GenSpec(self.family, n, dict(self.params), self.seed if seed is None else seed)


_PARAMS: dict[str, dict] = {
    "line_graph": {"avg_degree": 8.0},
    "hyper_line_graph": {"r": 3, "universe": None},
    "clique": {},
    "clique_minus_pm": {"shuffle": False},
    "unit_interval": {"length": 1.0, "window": None},
    "unit_disk": {"side": 1.0, "radius": None},
    "er_random": {"p": None},
    "regular_bipartite": {"d": 8},
    "hard_union": {"part_size": 4},
}


def family_params(family: str) -> dict:
    return dict(_PARAMS[family])


def generate(spec: GenSpec) -> AdjacencyArray:
    """Build ``spec`` with n as the target vertex count.

    Families with a structural size (regular_bipartite, hard_union) round n
    down to a multiple of their block size.  Distance-based families default
    to a window giving constant expected degree (about 8).
    """
    p = family_params(spec.family)
    p.update(spec.params)
    n, seed, f = spec.n, spec.seed, spec.family
    if f == "line_graph":
        return random_line_graph(n, p["avg_degree"], seed)
    if f == "hyper_line_graph":
        return random_hyper_line_graph(n, int(p["r"]), p["universe"], seed)
    if f == "clique":
        return clique(n)
    if f == "clique_minus_pm":
        return clique_minus_pm(n, seed if p["shuffle"] else None)
    if f == "unit_interval":
        window = p["window"] if p["window"] is not None else 4.0 * p["length"] / max(n, 1)
        return unit_interval(n, p["length"], window, seed)
    if f == "unit_disk":
        radius = p["radius"]
        if radius is None:
            radius = p["side"] * float(np.sqrt(8.0 / (np.pi * max(n, 1))))
        return unit_disk(n, p["side"], radius, seed)
    if f == "er_random":
        prob = p["p"] if p["p"] is not None else min(1.0, 8.0 / max(n - 1, 1))
        return er_random(n, prob, seed)
    if f == "regular_bipartite":
        d = int(p["d"])
        return regular_bipartite(n // 2, min(d, n // 2), seed)
    if f == "hard_union":
        size = int(p["part_size"])
        return hard_union(n // size, size, seed)
    raise AssertionError(f)


def family_beta_bound(spec: GenSpec, g: AdjacencyArray | None = None) -> int | None:
    """Proven ceiling on beta for the family, or None when it has none."""
    p = family_params(spec.family)
    p.update(spec.params)
    f = spec.family
    if f in ("line_graph", "clique_minus_pm", "unit_interval", "hard_union"):
        return 2
    if f == "clique":
        return 1
    if f == "hyper_line_graph":
        return int(p["r"])
    if f == "unit_disk":
        return 5
    if f == "regular_bipartite":
        return min(int(p["d"]), spec.n // 2)
    return None
