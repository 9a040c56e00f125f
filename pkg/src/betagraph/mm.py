"""Modified randomized greedy maximal matching, with and without a known beta."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import AdjacencyArray, ProbeCounter
from .sampleset import SampleSet

UNMATCHED = -1


@dataclass
class Matching:
    edges: list[tuple[int, int]]
    mate: list[int]

    @classmethod
    def from_edges(cls, edges, n: int) -> "Matching":
        mate = [UNMATCHED] * n
        out = []
        for u, v in edges:
            if u == v or mate[u] != UNMATCHED or mate[v] != UNMATCHED:
                raise ValueError(f"edge ({u},{v}) is not vertex-disjoint from the rest")
            mate[u], mate[v] = v, u
            out.append((u, v))
        return cls(out, mate)

    def __len__(self) -> int:
        return len(self.edges)

    def unmatched(self) -> list[int]:
        return [v for v, w in enumerate(self.mate) if w == UNMATCHED]

    def endpoints(self) -> list[int]:
        return [x for e in self.edges for x in e]


@dataclass
class MmStats:
    iterations: int = 0
    low_degree_scans: int = 0
    successes: int = 0
    degree_probes: int = 0
    neighbor_probes: int = 0
    guess_rounds: list[tuple[int, int]] = field(default_factory=list)

    @property
    def work(self) -> int:
        # one unit per loop pass plus the neighbor scans of the low-degree branch
        return self.iterations + self.low_degree_scans


def tau(n: int, beta: int, u_size: int) -> Fraction:
    if u_size <= 0:
        raise ValueError("threshold is undefined for an empty unmatched set")
    return Fraction(4 * n * beta, u_size)


def _as_rng(rng) -> random.Random:
    if isinstance(rng, random.Random):
        return rng
    return random.Random(rng)


def randomized_greedy_mm(
    g: AdjacencyArray,
    beta: int,
    rng=None,
    pc: ProbeCounter | None = None,
    iteration_cap: int | None = None,
) -> tuple[Matching, MmStats, bool]:
    """Run the threshold-switched randomized greedy matching.

    Each pass samples ``u`` from the unmatched set U.  Below the threshold
    (``deg(u) * |U| < 4 n beta``) the whole neighborhood is scanned for
    unmatched vertices; otherwise a single uniformly random neighbor is probed
    and matched if still unmatched.  Returns ``(matching, stats, completed)``;
    ``completed`` is False only when ``iteration_cap`` stopped the loop early.
    """
    if beta < 1:
        raise ValueError("beta must be at least 1")
    if iteration_cap is not None and iteration_cap < 0:
        raise ValueError("iteration_cap must be nonnegative")
    rng = _as_rng(rng)
    n = g.n
    deg, nbr = g.deg, g.nbr
    U = SampleSet(n)
    a2 = U.a2
    randrange = rng.randrange
    budget = 4 * n * beta
    mate = [UNMATCHED] * n
    edges: list[tuple[int, int]] = []
    iterations = low_scans = successes = high_probes = 0
    cap = math.inf if iteration_cap is None else iteration_cap

    while U.size:
        if iterations >= cap:
            break
        iterations += 1
        u = U.a1[randrange(U.size)]
        d = deg(u)
        if d * U.size < budget:
            low_scans += d
            cand = [w for w in (nbr(u, i) for i in range(d)) if a2[w] >= 0]
            U.remove(u)
            if cand:
                v = cand[randrange(len(cand))]
                U.remove(v)
                mate[u], mate[v] = v, u
                edges.append((u, v))
            successes += 1
        else:
            high_probes += 1
            v = nbr(u, randrange(d))
            if a2[v] >= 0:
                U.remove(u)
                U.remove(v)
                mate[u], mate[v] = v, u
                edges.append((u, v))
                successes += 1

    stats = MmStats(
        iterations=iterations,
        low_degree_scans=low_scans,
        successes=successes,
        degree_probes=iterations,
        neighbor_probes=low_scans + high_probes,
    )
    if pc is not None:
        pc.add(degree=stats.degree_probes, neighbor=stats.neighbor_probes)
    return Matching(edges, mate), stats, U.size == 0


def doubling_cap(n: int, beta: int, cap_constant: float = 64) -> int:
    """Per-round iteration cap ``cap_constant * n * ln(n) * beta`` (natural log)."""
    if n <= 1:
        return 0
    return math.ceil(cap_constant * n * math.log(n) * beta)


def mm_unknown_beta(
    g: AdjacencyArray,
    rng=None,
    pc: ProbeCounter | None = None,
    cap_constant: float = 64,
) -> tuple[Matching, MmStats]:
    """Guess beta = 2, 4, 8, ... restarting from scratch each round.

    Rounds are capped at :func:`doubling_cap` iterations except the one whose
    guess reaches n, which runs to completion.
    """
    rng = _as_rng(rng)
    n = g.n
    total = MmStats()
    beta = 2
    while True:
        final = beta >= n
        cap = None if final else doubling_cap(n, beta, cap_constant)
        matching, st, done = randomized_greedy_mm(g, beta, rng, pc, iteration_cap=cap)
        total.iterations += st.iterations
        total.low_degree_scans += st.low_degree_scans
        total.successes += st.successes
        total.degree_probes += st.degree_probes
        total.neighbor_probes += st.neighbor_probes
        total.guess_rounds.append((beta, st.iterations))
        if done:
            return matching, total
        beta *= 2
