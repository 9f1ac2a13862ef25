"""Clique trees and exactly hittable subtree models of chordal graphs"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType

import networkx as nx

from ..core.errors import ContractError, EHIGError
from ..graphs.chordal import maximal_cliques_chordal
from ..graphs.graph import Graph, graph_isomorphic_small, intersection_graph, is_connected

logger = logging.getLogger(__name__)


def clique_node(index: int) -> str:
    return f"Q{index}"


def leaf_node(vertex: str) -> str:
    return f"L_{vertex}"


@dataclass(frozen=True)
class CliqueTree:
    """Maximal cliques Q1..Qc joined into a tree"""

    cliques: tuple[frozenset[str], ...]
    edges: tuple[tuple[int, int], ...]

    def to_networkx(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(range(1, len(self.cliques) + 1))
        tree.add_edges_from(self.edges)
        return tree

    def holders(self, vertex: str) -> list[int]:
        """1-based indices of the cliques containing ``vertex``"""
        return [i for i, clique in enumerate(self.cliques, start=1) if vertex in clique]


@dataclass(frozen=True)
class SubtreeModel:
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    subtrees: Mapping[str, frozenset[str]] = field(repr=False)
    leaves: tuple[str, ...]

    def to_networkx(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(self.nodes)
        tree.add_edges_from(self.edges)
        return tree


def clique_tree(graph: Graph) -> CliqueTree | None:
    """Maximum-weight spanning tree of the clique intersection graph

    None for disconnected or non-chordal input.
    """
    if graph.n == 0 or not is_connected(graph):
        return None
    decomposition = maximal_cliques_chordal(graph)
    if decomposition is None:
        return None
    cliques = decomposition.cliques
    weighted = nx.Graph()
    weighted.add_nodes_from(range(1, len(cliques) + 1))
    for (i, a), (j, b) in combinations(enumerate(cliques, start=1), 2):
        if a & b:
            weighted.add_edge(i, j, weight=len(a & b))
    spanning = nx.maximum_spanning_tree(weighted)
    tree = CliqueTree(
        cliques=cliques,
        edges=tuple(sorted(tuple(sorted(edge)) for edge in spanning.edges())),
    )
    host = tree.to_networkx()
    for vertex in graph.vertices:
        if not nx.is_connected(host.subgraph(tree.holders(vertex))):
            raise EHIGError(f"clique tree breaks the subtree property at {vertex}")
    logger.debug(f"Clique tree on {len(cliques)} cliques")
    return tree


def chordal_subtree_model(graph: Graph) -> SubtreeModel:
    """Clique tree plus one pendant leaf per vertex; the leaves hit exactly"""
    if graph.n == 0 or not is_connected(graph):
        raise ContractError(
            "subtree model needs a connected graph; run it per component"
        )
    tree = clique_tree(graph)
    if tree is None:
        raise ContractError("subtree model needs a chordal graph")

    nodes = [clique_node(i) for i in range(1, len(tree.cliques) + 1)]
    edges = [(clique_node(i), clique_node(j)) for i, j in tree.edges]
    subtrees: dict[str, frozenset[str]] = {}
    for vertex in graph.vertices:
        holders = tree.holders(vertex)
        leaf = leaf_node(vertex)
        nodes.append(leaf)
        edges.append((clique_node(holders[0]), leaf))
        subtrees[vertex] = frozenset([clique_node(i) for i in holders] + [leaf])

    model = SubtreeModel(
        nodes=tuple(nodes),
        edges=tuple(edges),
        subtrees=MappingProxyType(subtrees),
        leaves=tuple(leaf_node(v) for v in graph.vertices),
    )
    if not verify_subtree_model(graph, model):
        raise EHIGError("subtree model failed its own verification")
    return model


def verify_subtree_model(graph: Graph, model: SubtreeModel) -> bool:
    """Host is a tree, subtrees are connected, leaves hit each subtree once,
    and the subtrees intersect like ``graph``"""
    host = model.to_networkx()
    if not nx.is_tree(host) or set(model.subtrees) != set(graph.vertices):
        return False
    leaves = set(model.leaves)
    for members in model.subtrees.values():
        if not members <= set(host.nodes) or not nx.is_connected(host.subgraph(members)):
            return False
        if len(members & leaves) != 1:
            return False
    rebuilt = intersection_graph(sorted(model.subtrees.items()))
    return graph_isomorphic_small(
        graph, rebuilt, mapping_hint={v: v for v in graph.vertices}
    )


def dump_subtree_model(model: SubtreeModel) -> str:
    lines = [f"node {node}" for node in model.nodes]
    lines.extend(f"edge {a} {b}" for a, b in model.edges)
    lines.extend(
        f"set {vertex} : {' '.join(sorted(members))}"
        for vertex, members in sorted(model.subtrees.items())
    )
    lines.append(f"hitting : {' '.join(model.leaves)}")
    return "\n".join(lines) + "\n"
