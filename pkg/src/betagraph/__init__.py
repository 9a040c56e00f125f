"""Greedy MIS and randomized maximal matching parameterized by neighborhood independence."""

from .graph import (
    CompleteMinusMatching,
    Graph,
    GraphFormatError,
    ProbeCounter,
    from_edge_list,
    read_graph,
    write_graph,
)
from .mis import VertexSet, caro_wei_mis, greedy_mis, mis_work_bound
from .mm import Matching, mm_unknown_beta, randomized_greedy_mm, tau
from .sampleset import SampleSet

__all__ = [
    "CompleteMinusMatching",
    "Graph",
    "GraphFormatError",
    "Matching",
    "ProbeCounter",
    "SampleSet",
    "VertexSet",
    "caro_wei_mis",
    "from_edge_list",
    "greedy_mis",
    "mis_work_bound",
    "mm_unknown_beta",
    "randomized_greedy_mm",
    "read_graph",
    "tau",
    "write_graph",
]

__version__ = "0.1.0"
