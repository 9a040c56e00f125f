"""Adaptive adversary for deterministic maximal matching on K_n minus a perfect matching.

Layout for n = 10k: dummies D = {0..2k-1} with fixed non-edges (2i, 2i+1),
core C = {2k..n-1}.  A free core vertex answers its first 2k queries with
dummies; on the (2k+1)-th it is committed as a non-edge with another free core
vertex and from then on answers with core vertices.  A strategy that stops
within 2k^2 queries leaves enough of C uncommitted that its output can be
made infeasible or non-maximal in some consistent graph.
"""

from __future__ import annotations

import hashlib
import importlib
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .graph import Graph

Strategy = Callable[["Adversary"], Iterable[tuple[int, int]]]


class AdversaryInvariantError(RuntimeError):
    pass


class Adversary:
    """Query oracle.  Degrees are public (all n-2) and are not counted.

    With ``rng=None`` every free choice takes the lowest available id;
    otherwise choices are uniform over the available candidates.
    """

    def __init__(self, k: int, rng: random.Random | int | None = None):
        if k < 1:
            raise ValueError("k must be at least 1")
        self.k = k
        self.n = 10 * k
        if rng is not None and not isinstance(rng, random.Random):
            rng = random.Random(rng)
        self.rng = rng
        n = self.n
        self.dummies = list(range(2 * k))
        self.core = list(range(2 * k, n))
        self.md = [(2 * i, 2 * i + 1) for i in range(k)]
        self.partner = [-1] * n
        for a, b in self.md:
            self.partner[a], self.partner[b] = b, a
        self.free = [False] * 2 * k + [True] * (8 * k)
        self.c_free_count = 8 * k
        self.mc_committed: list[tuple[int, int]] = []
        self.query_counts = [0] * n
        self.revealed: list[list[int]] = [[] for _ in range(n)]
        self._revealed_sets: list[set[int]] = [set() for _ in range(n)]
        self.transcript: list[tuple[int, int]] = []
        # deterministic-mode cursors: dummy -> over V, core -> over D then over C
        self._cur_all = [0] * n
        self._cur_d = [0] * n
        self._cur_c = [0] * n
        self._free_cursor = 2 * k

    # -- public views --------------------------------------------------------

    @property
    def total_queries(self) -> int:
        return len(self.transcript)

    @property
    def budget(self) -> int:
        return 2 * self.k * self.k

    @property
    def c_used(self) -> list[int]:
        return [v for v in self.core if not self.free[v]]

    @property
    def c_free(self) -> list[int]:
        return [v for v in self.core if self.free[v]]

    def is_dummy(self, v: int) -> bool:
        return v < 2 * self.k

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range")
        return self.n - 2

    # -- the strategy ----------------------------------------------------------

    def query(self, u: int) -> int:
        return answer_query(self, u)

    def _pick(self, candidates: list[int]) -> int:
        return candidates[0] if self.rng is None else self.rng.choice(candidates)

    def _commit(self, w: int, w2: int) -> None:
        self.partner[w], self.partner[w2] = w2, w
        self.free[w] = self.free[w2] = False
        self.c_free_count -= 2
        self.mc_committed.append((w, w2))

    def _choose_partner(self, w: int) -> int:
        if self.rng is None:
            c = self._free_cursor
            while c < self.n and (not self.free[c] or c == w):
                c += 1
            if c >= self.n:
                raise AdversaryInvariantError("no free core vertex left to pair with")
            # cursor may only skip vertices that are no longer free
            while self._free_cursor < self.n and not self.free[self._free_cursor]:
                self._free_cursor += 1
            return c
        options = [v for v in self.core if self.free[v] and v != w]
        if not options:
            raise AdversaryInvariantError("no free core vertex left to pair with")
        return self.rng.choice(options)

    def _answer_dummy(self, u: int) -> int:
        seen, mate = self._revealed_sets[u], self.partner[u]
        if self.rng is None:
            c = self._cur_all[u]
            while c == u or c == mate or c in seen:
                c += 1
            self._cur_all[u] = c + 1
            return c
        return self._pick([v for v in range(self.n) if v != u and v != mate and v not in seen])

    def _answer_free_core(self, u: int) -> int:
        seen = self._revealed_sets[u]
        if self.rng is None:
            c = self._cur_d[u]
            while c in seen:
                c += 1
            self._cur_d[u] = c + 1
            return c
        return self._pick([v for v in self.dummies if v not in seen])

    def _answer_used_core(self, u: int) -> int:
        seen, mate = self._revealed_sets[u], self.partner[u]
        n, lo = self.n, 2 * self.k
        if self.rng is None:
            c = max(self._cur_c[u], lo)
            while c < n and (c == u or c == mate or c in seen):
                c += 1
            if c < n:
                self._cur_c[u] = c + 1
                return c
            self._cur_c[u] = n
            # core exhausted: whatever dummies the free phase did not reveal
            c = self._cur_d[u]
            while c in seen:
                c += 1
            self._cur_d[u] = c + 1
            return c
        opts = [v for v in self.core if v != u and v != mate and v not in seen]
        if not opts:
            opts = [v for v in self.dummies if v not in seen]
        return self._pick(opts)

    # -- completion ------------------------------------------------------------

    def completed_partner(self) -> list[int]:
        """Non-edge partner of every vertex after pairing the free core arbitrarily."""
        partner = self.partner[:]
        rest = self.c_free
        if self.rng is not None:
            rest = rest[:]
            self.rng.shuffle(rest)
        for a, b in zip(rest[0::2], rest[1::2]):
            partner[a], partner[b] = b, a
        return partner

    def commit_pair(self, u: int, v: int) -> None:
        """Force (u, v) into the core non-edge matching; both must be free."""
        if u == v or not (self.free[u] and self.free[v]):
            raise ValueError("can only commit two distinct free core vertices")
        self._commit(u, v)


def answer_query(st: Adversary, u: int) -> int:
    if not 0 <= u < st.n:
        raise IndexError(f"vertex {u} out of range")
    if st.query_counts[u] >= st.n - 2:
        raise ValueError(f"vertex {u} already revealed all {st.n - 2} neighbors")
    if st.is_dummy(u):
        ans = st._answer_dummy(u)
    elif st.free[u] and st.query_counts[u] < 2 * st.k:
        ans = st._answer_free_core(u)
    else:
        if st.free[u]:
            st._commit(u, st._choose_partner(u))
        ans = st._answer_used_core(u)
    st.query_counts[u] += 1
    st.revealed[u].append(ans)
    st._revealed_sets[u].add(ans)
    st.transcript.append((u, ans))
    return ans


def new_adversary(k: int, choice_rng: random.Random | int | None = None) -> Adversary:
    return Adversary(k, choice_rng)


def finalize_consistent_graph(st: Adversary, partner: list[int] | None = None) -> Graph:
    """The member of the family fixed by completing the core non-edges.

    Each adjacency array starts with the answers already revealed, in query
    order, followed by the remaining neighbors ascending; replaying the
    transcript against it returns the same answers.
    """
    partner = st.completed_partner() if partner is None else partner
    n = st.n
    lists = []
    for v in range(n):
        head = st.revealed[v]
        seen = st._revealed_sets[v]
        if partner[v] in seen:
            raise AdversaryInvariantError(f"vertex {v} revealed its non-edge partner")
        tail = [w for w in range(n) if w != v and w != partner[v] and w not in seen]
        lists.append(head + tail)
    return Graph.from_adjacency(lists)


def replay_matches(st: Adversary, g: Graph) -> bool:
    """True iff probing g's arrays in transcript order reproduces every answer."""
    pos = [0] * st.n
    for u, ans in st.transcript:
        if pos[u] >= g.deg(u) or g.nbr(u, pos[u]) != ans:
            return False
        pos[u] += 1
    return True


# --- referee ----------------------------------------------------------------


@dataclass
class Verdict:
    k: int
    queries: int
    refuted: bool
    reason: str
    matching: list[tuple[int, int]]
    witness: Graph | None = None
    within_budget: bool = field(init=False)

    def __post_init__(self):
        self.within_budget = self.queries <= 2 * self.k * self.k

    @property
    def budget(self) -> int:
        return 2 * self.k * self.k

    def witness_hash(self) -> str:
        if self.witness is None:
            return ""
        h = hashlib.sha256()
        for u, v in self.witness.edges():
            h.update(f"{u} {v}\n".encode())
        return h.hexdigest()[:16]


def _refute(st: Adversary, matching: list[tuple[int, int]]) -> tuple[bool, str]:
    """Look for a consistent completion that breaks ``matching``; may commit one core pair."""
    n = st.n
    used: set[int] = set()
    for u, v in matching:
        if not (0 <= u < n and 0 <= v < n) or u == v or u in used or v in used:
            return True, f"output is not a matching at ({u},{v})"
        used.update((u, v))
    for u, v in matching:
        if st.partner[u] == v:
            return True, f"edge ({u},{v}) is a committed non-edge"
    for u, v in matching:
        if st.free[u] and st.free[v]:
            st.commit_pair(u, v)
            return True, f"edge ({u},{v}) lies inside the free core; committed as a non-edge"
    unmatched = [v for v in range(n) if v not in used]
    if len(unmatched) >= 3:
        # a perfect non-edge matching cannot separate three vertices pairwise
        return True, f"{len(unmatched)} unmatched vertices; two of them are adjacent"
    if len(unmatched) == 2:
        x, y = unmatched
        if st.partner[x] == y:
            return False, "maximal in every consistent graph"
        if st.free[x] and st.free[y]:
            others = [w for w in st.c_free if w not in (x, y)]
            if not others:
                return False, "the only completion pairs the two unmatched vertices"
            st.commit_pair(x, others[0])
        return True, f"unmatched vertices {x} and {y} are adjacent"
    return False, "maximal in every consistent graph"


def referee(
    strategy: Strategy,
    k: int,
    mode: str = "deterministic",
    seed: int | None = None,
) -> Verdict:
    """Duel ``strategy`` against a fresh adversary and try to refute its output.

    Refutation is sound at any query count; the lower bound says it must
    succeed whenever the strategy stayed within 2k^2 queries.
    """
    if mode not in ("deterministic", "random"):
        raise ValueError("mode must be 'deterministic' or 'random'")
    adv = Adversary(k, random.Random(seed) if mode == "random" else None)
    matching = [(int(u), int(v)) for u, v in strategy(adv)]
    queries = adv.total_queries
    refuted, reason = _refute(adv, matching)
    witness = finalize_consistent_graph(adv) if refuted else None
    return Verdict(k, queries, refuted, reason, matching, witness)


def witness_is_sound(st_transcript: list[tuple[int, int]], matching, witness: Graph) -> bool:
    """Witness reproduces the transcript and breaks the matching."""
    pos = [0] * witness.n
    for u, ans in st_transcript:
        if witness.nbr(u, pos[u]) != ans:
            return False
        pos[u] += 1
    used: set[int] = set()
    for u, v in matching:
        if u == v or u in used or v in used or not witness.has_edge(u, v):
            return True
        used.update((u, v))
    return any(u not in used and v not in used for u, v in witness.edges())


# --- strategies ---------------------------------------------------------------


def greedy_strategy(oracle: Adversary) -> list[tuple[int, int]]:
    """Textbook greedy: scan vertices, probe each one's array until an unmatched neighbor shows up."""
    n = oracle.n
    matched = [False] * n
    out = []
    for v in range(n):
        if matched[v]:
            continue
        for _ in range(oracle.degree(v)):
            w = oracle.query(v)
            if not matched[w]:
                matched[v] = matched[w] = True
                out.append((v, w))
                break
    return out


def exhaustive_strategy(oracle: Adversary) -> list[tuple[int, int]]:
    """Read the whole graph, then match greedily offline."""
    n = oracle.n
    adj = [[oracle.query(v) for _ in range(oracle.degree(v))] for v in range(n)]
    matched = [False] * n
    out = []
    for v in range(n):
        if matched[v]:
            continue
        for w in adj[v]:
            if not matched[w]:
                matched[v] = matched[w] = True
                out.append((v, w))
                break
    return out


def empty_strategy(oracle: Adversary) -> list[tuple[int, int]]:
    return []


STRATEGIES: dict[str, Strategy] = {
    "greedy": greedy_strategy,
    "exhaustive": exhaustive_strategy,
    "empty": empty_strategy,
}


def resolve_strategy(name: str) -> Strategy:
    """``greedy``, ``exhaustive``, ``empty`` or ``plugin:<module>:<callable>``."""
    if name in STRATEGIES:
        return STRATEGIES[name]
    if name.startswith("plugin:"):
        target = name[len("plugin:"):]
        module, _, attr = target.partition(":")
        if not module or not attr:
            raise ValueError("plugin strategies are named plugin:<module>:<callable>")
        return getattr(importlib.import_module(module), attr)
    raise ValueError(f"unknown strategy {name!r}")
