"""Brute-force oracles and structural checkers.

Everything here works on uncounted whole-graph views and is meant for small
instances; the exponential routines refuse inputs they cannot finish.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable

from .graph import AdjacencyArray
from .mis import VertexSet
from .mm import UNMATCHED, Matching

EXHAUSTIVE_MAX_N = 14
NEIGHBORHOOD_MAX_DEGREE = 25


class CapacityError(ValueError):
    pass


def _members(s) -> list[int]:
    return list(s.members) if isinstance(s, VertexSet) else list(s)


def is_independent_set(g: AdjacencyArray, s) -> bool:
    members = _members(s)
    inside = set(members)
    if len(inside) != len(members):
        return False
    return not any(u in inside for v in members for u in g.neighbor_list(v))


def is_maximal_independent_set(g: AdjacencyArray, s) -> bool:
    members = _members(s)
    if not is_independent_set(g, members):
        return False
    covered = [False] * g.n
    for v in members:
        covered[v] = True
        for u in g.neighbor_list(v):
            covered[u] = True
    return all(covered)


def is_matching(g: AdjacencyArray, edges: Iterable[tuple[int, int]]) -> bool:
    used: set[int] = set()
    for u, v in edges:
        if u == v or u in used or v in used:
            return False
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            return False
        used.update((u, v))
    return True


def is_maximal_matching(g: AdjacencyArray, m) -> bool:
    edges = m.edges if isinstance(m, Matching) else list(m)
    if not is_matching(g, edges):
        return False
    matched = [False] * g.n
    for u, v in edges:
        matched[u] = matched[v] = True
    if isinstance(m, Matching):
        if len(m.mate) != g.n:
            return False
        for v, w in enumerate(m.mate):
            if (w != UNMATCHED) != matched[v] or (w != UNMATCHED and m.mate[w] != v):
                return False
    return not any(
        not matched[u] and not matched[v] for u, v in g.edges()
    )


# --- independent-set search on bitsets -------------------------------------


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _clique_cover_size(P: int, adj: list[int]) -> int:
    """Greedy partition of P into cliques; bounds any independent set in P."""
    count = 0
    while P:
        low = P & -P
        v = low.bit_length() - 1
        P ^= low
        cand = P & adj[v]
        while cand:
            lw = cand & -cand
            w = lw.bit_length() - 1
            P ^= lw
            cand &= adj[w] & ~lw
        count += 1
    return count


def _max_independent_in(P: int, adj: list[int]) -> int:
    """Exact size of a maximum independent set inside bitset P (branch and bound)."""
    best = 0

    def expand(size: int, P: int) -> None:
        nonlocal best
        if not P:
            if size > best:
                best = size
            return
        if size + _clique_cover_size(P, adj) <= best:
            return
        # branch on the vertex with most neighbors inside P
        v, vd, Q = -1, -1, P
        while Q:
            low = Q & -Q
            u = low.bit_length() - 1
            Q ^= low
            d = _popcount(adj[u] & P)
            if d > vd:
                v, vd = u, d
        bit = 1 << v
        if vd == 0:
            # P is already independent
            expand(size + _popcount(P), 0)
            return
        expand(size + 1, P & ~adj[v] & ~bit)
        expand(size, P & ~bit)

    expand(0, P)
    return best


def neighborhood_independence(g: AdjacencyArray, max_degree: int = NEIGHBORHOOD_MAX_DEGREE) -> int:
    """Exact beta(g): largest independent set inside any single neighborhood.

    Edgeless graphs give 0.
    """
    if g.n > EXHAUSTIVE_MAX_N and g.max_degree() > max_degree:
        raise CapacityError(
            f"max degree {g.max_degree()} exceeds {max_degree}; "
            "use greedy_beta_lower_bound for a scalable estimate"
        )
    adj = g.adjacency_masks()
    return max((_max_independent_in(adj[v], adj) for v in range(g.n)), default=0)


def greedy_beta_lower_bound(g: AdjacencyArray) -> int:
    """max over v of a greedy (ascending-id) MIS size inside N(v)."""
    best = 0
    for v in range(g.n):
        nb = sorted(g.neighbor_list(v))
        inside = set(nb)
        chosen = 0
        blocked: set[int] = set()
        for u in nb:
            if u in blocked:
                continue
            chosen += 1
            blocked.update(w for w in g.neighbor_list(u) if w in inside)
        best = max(best, chosen)
    return best


def independent_masks(g: AdjacencyArray) -> list[int]:
    """Every independent set of g as a bitmask, by plain subset enumeration."""
    if g.n > EXHAUSTIVE_MAX_N:
        raise CapacityError(f"exhaustive enumeration needs n <= {EXHAUSTIVE_MAX_N}")
    adj = g.adjacency_masks()
    n = g.n
    independent = bytearray(1 << n)
    independent[0] = 1
    out = [0]
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        v = low.bit_length() - 1
        if independent[rest] and not adj[v] & rest:
            independent[mask] = 1
            out.append(mask)
    return out


def max_independent_set_size(g: AdjacencyArray) -> int:
    """alpha(g) by exhaustive subset enumeration (n <= 14)."""
    return max(_popcount(m) for m in independent_masks(g))


def min_vertex_cover_size(g: AdjacencyArray) -> int:
    # complements of independent sets are exactly the vertex covers
    return g.n - max_independent_set_size(g)


def delta_good_fraction(g: AdjacencyArray, u, delta) -> Fraction:
    """Fraction of members x of U with deg_U(x) >= delta*deg_out(x) or deg(x) < 1/delta."""
    members = _members(u)
    if not members:
        raise ValueError("U must be nonempty")
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    inside = set(members)
    good = 0
    for x in members:
        nb = g.neighbor_list(x)
        d_in = sum(1 for y in nb if y in inside)
        d_out = len(nb) - d_in
        if d_in >= delta * d_out or len(nb) * delta < 1:
            good += 1
    return Fraction(good, len(members))


def delta_good_fraction_masks(adj: list[int], umask: int, delta: Fraction) -> Fraction:
    """Bitset form of :func:`delta_good_fraction` for exhaustive subset sweeps."""
    num, den = delta.numerator, delta.denominator
    good = total = 0
    x_mask = umask
    while x_mask:
        low = x_mask & -x_mask
        x = low.bit_length() - 1
        x_mask ^= low
        total += 1
        d = _popcount(adj[x])
        d_in = _popcount(adj[x] & umask)
        # cross-multiplied: d_in >= delta * d_out, or d * delta < 1
        if d_in * den >= num * (d - d_in) or d * num < den:
            good += 1
    return Fraction(good, total)


def random_permutation_independent_set(g: AdjacencyArray, b, rng=None) -> VertexSet:
    """Members of b that precede all their b-neighbors in a random order."""
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    members = _members(b)
    perm = members[:]
    rng.shuffle(perm)
    rank = {v: i for i, v in enumerate(perm)}
    chosen = [
        v for v in members
        if all(rank[v] < rank[u] for u in g.neighbor_list(v) if u in rank)
    ]
    return VertexSet.from_members(chosen, g.n)


def vertex_cover_from_mm(m: Matching) -> VertexSet:
    return VertexSet.from_members(m.endpoints(), len(m.mate))


def is_vertex_cover(g: AdjacencyArray, s) -> bool:
    inside = set(_members(s))
    return all(u in inside or v in inside for u, v in g.edges())


def caro_wei_sum(g: AdjacencyArray) -> Fraction:
    return sum((Fraction(1, d + 1) for d in g.degrees()), Fraction(0))
