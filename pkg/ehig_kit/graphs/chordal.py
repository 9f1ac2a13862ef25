"""Chordality via maximum cardinality search"""

import logging
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChordalDecomposition:
    """A perfect elimination ordering and the maximal cliques read off it"""

    elimination_order: tuple[str, ...]
    cliques: tuple[frozenset[str], ...]


def maximum_cardinality_search(graph: Graph) -> list[str]:
    """Visit order of MCS; ties go to the smallest label"""
    weight = dict.fromkeys(graph.vertices, 0)
    visited: set[str] = set()
    order: list[str] = []
    for _ in graph.vertices:
        vertex = min(
            (v for v in graph.vertices if v not in visited),
            key=lambda v: (-weight[v], v),
        )
        visited.add(vertex)
        order.append(vertex)
        for neighbor in graph.neighbors(vertex):
            if neighbor not in visited:
                weight[neighbor] += 1
    return order


def is_perfect_elimination_order(graph: Graph, order: list[str]) -> bool:
    position = {v: i for i, v in enumerate(order)}
    for vertex in order:
        later = [u for u in graph.neighbors(vertex) if position[u] > position[vertex]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        if any(u != parent and not graph.adjacent(parent, u) for u in later):
            return False
    return True


def find_chordless_cycle(graph: Graph) -> list[str] | None:
    """An induced cycle on at least four vertices, or None if chordal

    For each vertex v and pair of non-adjacent neighbors u, w, a shortest
    u-w path avoiding the rest of N[v] closes a chordless cycle through v.
    """
    nx_graph = graph.to_networkx()
    for vertex in graph.vertices:
        closed = graph.closed_neighborhood(vertex)
        for u, w in combinations(graph.neighbors(vertex), 2):
            if graph.adjacent(u, w):
                continue
            allowed = [x for x in graph.vertices if x not in closed or x in (u, w)]
            try:
                path = nx.shortest_path(nx_graph.subgraph(allowed), u, w)
            except nx.NetworkXNoPath:
                continue
            return [vertex, *path]
    return None


def maximal_cliques_chordal(graph: Graph) -> ChordalDecomposition | None:
    """PEO and maximal cliques of a chordal graph, None if not chordal"""
    search_order = maximum_cardinality_search(graph)
    elimination = list(reversed(search_order))
    if not is_perfect_elimination_order(graph, elimination):
        logger.debug("MCS order is not a perfect elimination ordering")
        return None

    position = {v: i for i, v in enumerate(elimination)}
    candidates = [
        frozenset(
            [vertex]
            + [u for u in graph.neighbors(vertex) if position[u] > position[vertex]]
        )
        for vertex in elimination
    ]
    cliques = [
        clique
        for i, clique in enumerate(candidates)
        if not any(
            clique < other or (clique == other and j < i)
            for j, other in enumerate(candidates)
            if j != i
        )
    ]
    cliques.sort(key=lambda clique: sorted(clique))
    logger.debug(f"Chordal graph with {len(cliques)} maximal cliques")
    return ChordalDecomposition(tuple(elimination), tuple(cliques))


def is_chordal(graph: Graph) -> bool:
    return maximal_cliques_chordal(graph) is not None
