"""Canonical stretched interval representation of an interval graph

Each clique Q_i of the clique path becomes a gadget of ``s_i + e_i - 1``
consecutive points, where ``s_i`` intervals start and ``e_i`` intervals end
at the clique. The gadget's zero point z_i is its ``s_i``-th point. Starting
intervals take left endpoints z_i, z_i - 1, ... by descending right range;
ending intervals take right endpoints z_i, z_i + 1, ... by ascending left
range. One separator point sits between consecutive gadgets.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from ..core.errors import ContractError
from ..graphs.interval import CliquePath
from ..hyperkit.formats import format_hypergraph
from ..hyperkit.hypergraph import Interval, IntervalHypergraph

logger = logging.getLogger(__name__)

INTERVAL_PREFIX = "I_"


def interval_id(vertex: str) -> str:
    return f"{INTERVAL_PREFIX}{vertex}"


@dataclass(frozen=True)
class Gadget:
    """Point span of one clique's gadget"""

    index: int
    start: int
    end: int
    zero: int
    starting: tuple[str, ...]
    ending: tuple[str, ...]

    @property
    def size(self) -> int:
        return self.end - self.start + 1

    def points(self) -> range:
        return range(self.start, self.end + 1)


@dataclass(frozen=True)
class StretchedModel:
    """The canonical model H_G together with its layout"""

    hypergraph: IntervalHypergraph
    vertex_map: Mapping[str, str] = field(repr=False)
    gadgets: tuple[Gadget, ...]
    separators: tuple[int, ...]
    clique_path: CliquePath = field(repr=False)

    @property
    def n(self) -> int:
        return self.hypergraph.n

    @property
    def zero_points(self) -> tuple[int, ...]:
        return tuple(gadget.zero for gadget in self.gadgets)

    def interval_of(self, vertex: str) -> Interval:
        return self.hypergraph.get(self.vertex_map[vertex])

    def vertex_of(self, interval_id: str) -> str:
        for vertex, mapped in self.vertex_map.items():
            if mapped == interval_id:
                return vertex
        raise KeyError(interval_id)

    def vertices_at(self, point: int) -> frozenset[str]:
        """Vertices whose intervals contain ``point``"""
        return frozenset(
            self.vertex_of(interval.id) for interval in self.hypergraph.containing(point)
        )


def build_canonical(clique_path: CliquePath) -> StretchedModel:
    """Lay out gadgets left to right and stretch every vertex interval"""
    ranges = clique_path.ranges
    if len(set(ranges.values())) != len(ranges):
        raise ContractError(
            "clique ranges are not pairwise distinct; apply reduce_twins first"
        )

    lefts: dict[str, int] = {}
    rights: dict[str, int] = {}
    gadgets: list[Gadget] = []
    separators: list[int] = []
    cursor = 1
    for index in range(1, clique_path.t + 1):
        # further out on ties: smaller label
        starting = sorted(
            (v for v, (left, _) in ranges.items() if left == index),
            key=lambda v: (ranges[v][1], v),
            reverse=True,
        )
        ending = sorted(
            (v for v, (_, right) in ranges.items() if right == index),
            key=lambda v: (-ranges[v][0], v),
            reverse=True,
        )
        if not starting or not ending:
            raise ContractError(f"clique {index} has no starting or no ending vertex")
        zero = cursor + len(starting) - 1
        end = zero + len(ending) - 1
        for offset, vertex in enumerate(starting):
            lefts[vertex] = zero - offset
        for offset, vertex in enumerate(ending):
            rights[vertex] = zero + offset
        gadgets.append(
            Gadget(index, cursor, end, zero, tuple(starting), tuple(ending))
        )
        cursor = end + 1
        if index < clique_path.t:
            separators.append(cursor)
            cursor += 1

    vertex_map = {vertex: interval_id(vertex) for vertex in ranges}
    intervals = tuple(
        Interval(vertex_map[vertex], lefts[vertex], rights[vertex])
        for vertex in sorted(ranges, key=lambda v: (lefts[v], v))
    )
    hypergraph = IntervalHypergraph(n=cursor - 1, intervals=intervals)
    logger.debug(
        f"Canonical model: {len(gadgets)} gadgets, N={hypergraph.n}, "
        f"{hypergraph.m} intervals"
    )
    return StretchedModel(
        hypergraph=hypergraph,
        vertex_map=MappingProxyType(vertex_map),
        gadgets=tuple(gadgets),
        separators=tuple(separators),
        clique_path=clique_path,
    )


def dump_model(model: StretchedModel) -> str:
    """Hypergraph text with ``# z`` and ``# map`` comment lines"""
    comments = [f"z {gadget.index} {gadget.zero}" for gadget in model.gadgets]
    comments.extend(
        f"map {vertex} {mapped}" for vertex, mapped in sorted(model.vertex_map.items())
    )
    return format_hypergraph(model.hypergraph, comments)
