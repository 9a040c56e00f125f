"""One-call derived algorithms: vertex cover, Caro-Wei independent set, matching via the line graph."""

from __future__ import annotations

import random

from .generators import line_graph
from .graph import AdjacencyArray, ProbeCounter
from .mis import VertexSet, caro_wei_mis, greedy_mis
from .mm import Matching, mm_unknown_beta
from .verify import vertex_cover_from_mm


def approx_vertex_cover(g: AdjacencyArray, rng=None, pc: ProbeCounter | None = None) -> VertexSet:
    """Both endpoints of a maximal matching: a cover at most twice the optimum."""
    matching, _ = mm_unknown_beta(g, rng, pc)
    return vertex_cover_from_mm(matching)


def caro_wei_independent_set(g: AdjacencyArray, pc: ProbeCounter | None = None) -> VertexSet:
    result, _ = caro_wei_mis(g, pc)
    return result


def mm_via_line_graph(g: AdjacencyArray, rng=None, pc: ProbeCounter | None = None) -> Matching:
    """Greedy MIS on an explicit L(g), mapped back to edges of g.

    Builds all of L(g); a demonstration of the MIS/matching correspondence,
    not a fast path.  With ``rng`` the line-graph vertices are scanned in a
    random order, otherwise in canonical edge order.
    """
    edges = list(g.edges())
    if not edges:
        return Matching([], [-1] * g.n)
    lg = line_graph(g)
    order = None
    if rng is not None:
        rng = rng if isinstance(rng, random.Random) else random.Random(rng)
        order = list(range(lg.n))
        rng.shuffle(order)
    chosen, _ = greedy_mis(lg, order, pc)
    return Matching.from_edges((edges[i] for i in chosen), g.n)
