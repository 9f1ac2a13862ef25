"""Forbidden structures: an induced path whose open neighborhood holds an
independent set at least three larger than the path"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass

from ..core.config import DEFAULT_PATH_CAP
from ..core.types import WitnessStrategy
from ..graphs.graph import Graph
from ..graphs.interval import CliquePath
from .backbone import BackbonePath, construct_backbone, cover_size_profile
from .covers import neighborhood_clique_cover, private_vertices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ForbiddenWitness:
    """Induced path with an independent set in its open neighborhood

    ``path`` lists the vertices in path order. ``independents`` holds at
    least ``k + 3`` pairwise non-adjacent vertices off the path, each
    adjacent to some path vertex. ``strategy`` records which search found it.
    """

    path: tuple[str, ...]
    independents: tuple[str, ...]
    strategy: WitnessStrategy = WitnessStrategy.EXHAUSTIVE

    @property
    def k(self) -> int:
        return len(self.path)


def verify_forbidden_witness(graph: Graph, witness: ForbiddenWitness) -> bool:
    """Check a witness against ``graph`` alone

    Args:
        graph: The graph the witness claims to refute.
        witness: Path and independent set to check.

    Returns:
        True when every vertex belongs to ``graph``, the path is induced and
        free of repeats, and ``independents`` is an independent set of at
        least ``k + 3`` path neighbours disjoint from the path.
    """
    path, independents = witness.path, witness.independents
    members = set(graph.vertices)
    if not path or not set(path) <= members or not set(independents) <= members:
        return False
    if len(set(path)) != len(path) or len(set(independents)) != len(independents):
        return False
    for i, u in enumerate(path):
        for j in range(i + 1, len(path)):
            if graph.adjacent(u, path[j]) != (j == i + 1):
                return False
    if len(independents) < len(path) + 3 or set(independents) & set(path):
        return False
    if not graph.is_independent(independents):
        return False
    return all(any(graph.adjacent(w, v) for v in path) for w in independents)


def _private_witness(
    graph: Graph,
    clique_path: CliquePath,
    path: tuple[str, ...],
    strategy: WitnessStrategy,
) -> ForbiddenWitness | None:
    """One smallest-labelled private vertex per clique covering N[path]"""
    cover = sorted(
        {index for v in path for index in neighborhood_clique_cover(clique_path, v)}
    )
    independents: list[str] = []
    for clique in cover:
        choices = [
            v
            for v in private_vertices(clique_path, cover, clique)
            if v not in path and any(graph.adjacent(v, u) for u in path)
        ]
        if not choices:
            return None
        independents.append(choices[0])
    return ForbiddenWitness(path, tuple(independents), strategy)


def _constructive_candidates(
    graph: Graph, clique_path: CliquePath, backbone: BackbonePath
) -> Iterator[ForbiddenWitness]:
    profile = cover_size_profile(backbone, clique_path)
    for segment, sizes in zip(backbone.segments, profile.segment_sizes, strict=True):
        for vertex, size in zip(segment.vertices, sizes, strict=True):
            if size >= 4:
                witness = _private_witness(
                    graph, clique_path, (vertex,), WitnessStrategy.STAR
                )
                if witness is not None:
                    yield witness
    for segment, sizes in zip(backbone.segments, profile.segment_sizes, strict=True):
        threes = [i for i, size in enumerate(sizes) if size == 3]
        for a, first in enumerate(threes):
            for last in threes[a + 1 :]:
                witness = _private_witness(
                    graph,
                    clique_path,
                    segment.vertices[first : last + 1],
                    WitnessStrategy.SEGMENT,
                )
                if witness is not None:
                    yield witness


def induced_paths(graph: Graph, max_vertices: int) -> Iterator[tuple[str, ...]]:
    """Induced paths by increasing length, each listed in one direction"""
    level = [(vertex,) for vertex in graph.vertices]
    for size in range(1, max_vertices + 1):
        for path in level:
            if size == 1 or path[0] < path[-1]:
                yield path
        if size == max_vertices:
            return
        level = [
            path + (w,)
            for path in level
            for w in graph.neighbors(path[-1])
            if w not in path and not any(graph.adjacent(w, u) for u in path[:-1])
        ]
        if not level:
            return


def max_independent_neighbors(
    graph: Graph, clique_path: CliquePath, path: tuple[str, ...]
) -> list[str]:
    """Maximum independent set of N(path) by earliest clique-range end"""
    on_path = set(path)
    neighborhood = {w for v in path for w in graph.neighbors(v) if w not in on_path}
    chosen: list[str] = []
    last = 0
    for vertex in sorted(
        neighborhood, key=lambda v: (clique_path.right(v), clique_path.left(v), v)
    ):
        if clique_path.left(vertex) > last:
            chosen.append(vertex)
            last = clique_path.right(vertex)
    return chosen


def extract_forbidden_witness(
    graph: Graph,
    clique_path: CliquePath,
    backbone: BackbonePath | None = None,
    path_cap: int = DEFAULT_PATH_CAP,
) -> ForbiddenWitness | None:
    """Constructive witness from the backbone, else bounded exhaustive search"""
    if backbone is None:
        backbone = construct_backbone(clique_path)
    for candidate in _constructive_candidates(graph, clique_path, backbone):
        if verify_forbidden_witness(graph, candidate):
            logger.debug(f"Constructive {candidate.strategy.value} witness found")
            return candidate
        logger.warning(
            f"Constructive witness on path {list(candidate.path)} failed "
            "verification; falling back to exhaustive search"
        )

    for path in induced_paths(graph, path_cap):
        independents = max_independent_neighbors(graph, clique_path, path)
        if len(independents) >= len(path) + 3:
            witness = ForbiddenWitness(path, tuple(independents))
            if verify_forbidden_witness(graph, witness):
                logger.debug(f"Exhaustive witness on path {list(path)}")
                return witness
    logger.debug(f"No forbidden witness with at most {path_cap} path vertices")
    return None
