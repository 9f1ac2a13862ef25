"""Simple undirected graphs with stable string labels"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType

import networkx as nx

from ..core.config import DEFAULT_MAX_ISOMORPHISM_VERTICES
from ..core.errors import GraphInputError, GuardExceededError


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; vertices and neighbor lists are sorted by label"""

    vertices: tuple[str, ...]
    adjacency: Mapping[str, tuple[str, ...]] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency.values()) // 2

    def neighbors(self, vertex: str) -> tuple[str, ...]:
        """Open neighborhood N(v)"""
        return self.adjacency[vertex]

    def closed_neighborhood(self, vertex: str) -> frozenset[str]:
        """Closed neighborhood N[v]"""
        return frozenset(self.adjacency[vertex]) | {vertex}

    def adjacent(self, u: str, v: str) -> bool:
        return v in self._neighbor_sets[u]

    def degree(self, vertex: str) -> int:
        return len(self.adjacency[vertex])

    def edges(self) -> list[tuple[str, str]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted"""
        return [(u, v) for u in self.vertices for v in self.adjacency[u] if u < v]

    def induced(self, vertices: Iterable[str]) -> "Graph":
        """Induced subgraph on ``vertices``"""
        keep = set(vertices)
        unknown = keep - set(self.vertices)
        if unknown:
            raise GraphInputError(f"unknown vertices: {sorted(unknown)}")
        return build_graph(
            [(u, v) for u, v in self.edges() if u in keep and v in keep],
            labels=keep,
        )

    def is_independent(self, vertices: Iterable[str]) -> bool:
        return not any(self.adjacent(u, v) for u, v in combinations(vertices, 2))

    def is_clique(self, vertices: Iterable[str]) -> bool:
        return all(self.adjacent(u, v) for u, v in combinations(vertices, 2))

    def to_networkx(self) -> nx.Graph:
        """networkx copy with nodes and edges inserted in label order"""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges())
        return graph

    @property
    def _neighbor_sets(self) -> dict[str, frozenset[str]]:
        cached = self.__dict__.get("_sets")
        if cached is None:
            cached = {v: frozenset(nbrs) for v, nbrs in self.adjacency.items()}
            object.__setattr__(self, "_sets", cached)
        return cached

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and dict(self.adjacency) == dict(
            other.adjacency
        )

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(self.edges())))


def build_graph(
    edges: Iterable[tuple[str, str]], labels: Iterable[str] | None = None
) -> Graph:
    """Normalize an edge list into a Graph

    ``labels`` adds (possibly isolated) vertices; every edge endpoint is
    added as well. Loops and repeated edges are rejected with the index of
    the offending edge.
    """
    vertex_set: set[str] = {str(label) for label in labels or ()}
    seen: set[frozenset[str]] = set()
    neighbor_sets: dict[str, set[str]] = {}
    for position, (u, v) in enumerate(edges, start=1):
        u, v = str(u), str(v)
        if u == v:
            raise GraphInputError(f"edge {position}: loop on vertex {u!r}")
        key = frozenset((u, v))
        if key in seen:
            raise GraphInputError(f"edge {position}: repeated edge {u}-{v}")
        seen.add(key)
        vertex_set.update((u, v))
        neighbor_sets.setdefault(u, set()).add(v)
        neighbor_sets.setdefault(v, set()).add(u)
    vertices = tuple(sorted(vertex_set))
    adjacency = {v: tuple(sorted(neighbor_sets.get(v, ()))) for v in vertices}
    return Graph(vertices=vertices, adjacency=MappingProxyType(adjacency))


def from_networkx(graph: nx.Graph) -> Graph:
    return build_graph(graph.edges(), labels=graph.nodes())


def connected_components(graph: Graph) -> list[list[str]]:
    """Components as sorted label lists, ordered by smallest contained label"""
    seen: set[str] = set()
    components: list[list[str]] = []
    for start in graph.vertices:
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        component = []
        while stack:
            vertex = stack.pop()
            component.append(vertex)
            for neighbor in graph.neighbors(vertex):
                if neighbor not in seen:
                    seen.add(neighbor)
                    stack.append(neighbor)
        components.append(sorted(component))
    return components


def is_connected(graph: Graph) -> bool:
    return len(connected_components(graph)) <= 1


def intersection_graph(sets: Iterable[tuple[str, Iterable[object]]]) -> Graph:
    """One vertex per set, an edge iff the two sets intersect"""
    items = [(str(set_id), frozenset(elements)) for set_id, elements in sets]
    ids = [set_id for set_id, _ in items]
    if len(set(ids)) != len(ids):
        raise GraphInputError("set ids must be unique")
    edges = [
        (a_id, b_id)
        for (a_id, a), (b_id, b) in combinations(items, 2)
        if not a.isdisjoint(b)
    ]
    return build_graph(edges, labels=ids)


def graph_isomorphic_small(
    first: Graph,
    second: Graph,
    mapping_hint: Mapping[str, str] | None = None,
    max_vertices: int = DEFAULT_MAX_ISOMORPHISM_VERTICES,
) -> bool:
    """Edge-preserving bijection test

    With a hint the bijection is checked directly; otherwise VF2 search is
    used, guarded by ``max_vertices``.
    """
    if first.n != second.n or first.edge_count != second.edge_count:
        return False
    if mapping_hint is not None:
        if set(mapping_hint) != set(first.vertices) or set(
            mapping_hint.values()
        ) != set(second.vertices):
            return False
        mapped = {
            frozenset((mapping_hint[u], mapping_hint[v])) for u, v in first.edges()
        }
        return mapped == {frozenset(edge) for edge in second.edges()}
    if first.n > max_vertices:
        raise GuardExceededError("isomorphism vertex guard", max_vertices, first.n)
    if sorted(map(first.degree, first.vertices)) != sorted(
        map(second.degree, second.vertices)
    ):
        return False
    return nx.is_isomorphic(first.to_networkx(), second.to_networkx())
