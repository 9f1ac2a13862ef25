"""Graphs, chordality and interval recognition"""

from .chordal import (
    ChordalDecomposition,
    find_chordless_cycle,
    is_chordal,
    maximal_cliques_chordal,
    maximum_cardinality_search,
)
from .formats import format_graph, parse_graph
from .graph import (
    Graph,
    build_graph,
    connected_components,
    from_networkx,
    graph_isomorphic_small,
    intersection_graph,
    is_connected,
)
from .interval import (
    Claw,
    CliquePath,
    IntervalCheck,
    ProperIntervalCheck,
    find_claw,
    has_interval_model_bruteforce,
    interval_clique_path,
    is_proper_interval,
    recognize_interval,
    reduce_twins,
    require_clique_path,
    twin_reduced_clique_path,
    validate_clique_path,
    vertex_ranges,
)

__all__ = [
    "ChordalDecomposition",
    "Claw",
    "CliquePath",
    "Graph",
    "IntervalCheck",
    "ProperIntervalCheck",
    "build_graph",
    "connected_components",
    "find_chordless_cycle",
    "find_claw",
    "format_graph",
    "from_networkx",
    "graph_isomorphic_small",
    "has_interval_model_bruteforce",
    "intersection_graph",
    "interval_clique_path",
    "is_chordal",
    "is_connected",
    "is_proper_interval",
    "maximal_cliques_chordal",
    "maximum_cardinality_search",
    "parse_graph",
    "recognize_interval",
    "reduce_twins",
    "require_clique_path",
    "twin_reduced_clique_path",
    "validate_clique_path",
    "vertex_ranges",
]
