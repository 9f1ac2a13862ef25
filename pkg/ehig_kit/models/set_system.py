"""Exactly hittable set-system model of an arbitrary graph

Every vertex v becomes the set holding the element v and one element per
incident edge. Two sets meet exactly on their shared edge, and the vertex
elements hit every set once.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from ..core.errors import EHIGError
from ..graphs.graph import Graph, graph_isomorphic_small, intersection_graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Element:
    """Universe element: ``(v,)`` for a vertex, ``(u, v)`` with ``u < v`` for an edge

    Elements are compared structurally, so vertex labels containing ``-``
    never collide with edge elements. ``str`` gives the dump form.
    """

    ends: tuple[str, ...]

    @property
    def is_edge(self) -> bool:
        return len(self.ends) == 2

    def __str__(self) -> str:
        return "-".join(self.ends)


def vertex_element(v: str) -> Element:
    return Element((v,))


def edge_element(u: str, v: str) -> Element:
    return Element(tuple(sorted((u, v))))


@dataclass(frozen=True)
class SetSystemModel:
    universe: tuple[Element, ...]
    sets: Mapping[str, frozenset[Element]] = field(repr=False)
    hitting: tuple[Element, ...]


def harary_model(graph: Graph) -> SetSystemModel:
    """Set-system intersection model of ``graph`` with an exact hitting set

    Args:
        graph: Any simple graph; no interval or chordal structure is needed.

    Returns:
        A model whose set for ``v`` is ``{v} | {uv : u in N(v)}``. The
        vertex elements form the hitting set and meet every set exactly
        once.

    Raises:
        EHIGError: If the built model fails ``verify_set_system_model``.
    """
    edges = graph.edges()
    sets = {
        v: frozenset(
            [vertex_element(v)] + [edge_element(v, u) for u in graph.neighbors(v)]
        )
        for v in graph.vertices
    }
    hitting = tuple(vertex_element(v) for v in graph.vertices)
    model = SetSystemModel(
        universe=hitting + tuple(edge_element(u, v) for u, v in edges),
        sets=MappingProxyType(sets),
        hitting=hitting,
    )
    if not verify_set_system_model(graph, model):
        raise EHIGError("set-system model failed its own verification")
    logger.debug(f"Set-system model with {len(model.universe)} elements")
    return model


def verify_set_system_model(graph: Graph, model: SetSystemModel) -> bool:
    """Designated set hits every set once and the sets intersect like ``graph``"""
    if set(model.sets) != set(graph.vertices):
        return False
    universe = set(model.universe)
    if not set(model.hitting) <= universe or any(
        not members <= universe for members in model.sets.values()
    ):
        return False
    hitting = set(model.hitting)
    if any(len(members & hitting) != 1 for members in model.sets.values()):
        return False
    rebuilt = intersection_graph(sorted(model.sets.items(), key=lambda item: item[0]))
    return graph_isomorphic_small(
        graph, rebuilt, mapping_hint={v: v for v in graph.vertices}
    )


def dump_set_system(model: SetSystemModel) -> str:
    lines = [
        f"set {vertex} : {' '.join(str(e) for e in sorted(members))}"
        for vertex, members in sorted(model.sets.items(), key=lambda item: item[0])
    ]
    lines.append(f"hitting : {' '.join(str(e) for e in model.hitting)}")
    return "\n".join(lines) + "\n"
