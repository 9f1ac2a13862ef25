"""Seeded graph and hypergraph generators"""

import logging
import random
from dataclasses import dataclass

import networkx as nx

from ..core.errors import InputError
from ..core.types import GeneratorFamily
from ..graphs.graph import Graph, build_graph, from_networkx, intersection_graph
from ..hyperkit.hypergraph import Interval, IntervalHypergraph
from ..templates import FixtureManager

logger = logging.getLogger(__name__)

MAX_RANDOM_INTERVALS = 10


@dataclass(frozen=True)
class GeneratorSpec:
    family: GeneratorFamily
    size: int = 8
    seed: int = 0
    edge_probability: float = 0.3
    fixture: str | None = None

    def __post_init__(self) -> None:
        if self.family is GeneratorFamily.FIXTURE:
            if not self.fixture:
                raise InputError("paper-fixture generation needs a fixture name")
        elif self.size < 1:
            raise InputError(f"generator size must be at least 1, got {self.size}")
        if not 0.0 <= self.edge_probability <= 1.0:
            raise InputError(
                f"edge probability must lie in [0, 1], got {self.edge_probability}"
            )


def vertex_labels(count: int, prefix: str = "v") -> list[str]:
    """``v1..vN`` zero-padded so that label order is numeric order"""
    width = len(str(count))
    return [f"{prefix}{i:0{width}d}" for i in range(1, count + 1)]


def model_graph(hypergraph: IntervalHypergraph) -> Graph:
    """Intersection graph of a hypergraph's intervals, labelled by interval id"""
    return intersection_graph(
        (interval.id, range(interval.left, interval.right + 1))
        for interval in hypergraph.intervals
    )


def random_interval_model(size: int, rng: random.Random) -> IntervalHypergraph:
    """``size`` intervals with endpoints drawn from 1..2*size"""
    intervals = []
    for label in vertex_labels(size):
        left, right = sorted((rng.randint(1, 2 * size), rng.randint(1, 2 * size)))
        intervals.append(Interval(label, left, right))
    return IntervalHypergraph(n=2 * size, intervals=tuple(intervals))


def random_proper_interval_model(size: int, rng: random.Random) -> IntervalHypergraph:
    """Equal-length intervals with distinct left endpoints: a staircase"""
    length = rng.randint(0, size)
    lefts = sorted(rng.sample(range(1, 2 * size + 1), size))
    intervals = tuple(
        Interval(label, left, left + length)
        for label, left in zip(vertex_labels(size), lefts, strict=True)
    )
    return IntervalHypergraph(n=2 * size + length, intervals=intervals)


def random_graph(size: int, edge_probability: float, rng: random.Random) -> Graph:
    sample = nx.gnp_random_graph(size, edge_probability, seed=rng)
    labels = dict(zip(range(size), vertex_labels(size), strict=True))
    return from_networkx(nx.relabel_nodes(sample, labels))


def random_chordal_graph(size: int, rng: random.Random) -> Graph:
    """Connected chordal graph grown by adding simplicial vertices"""
    labels = vertex_labels(size)
    adjacency: dict[str, set[str]] = {labels[0]: set()}
    edges: list[tuple[str, str]] = []
    for vertex in labels[1:]:
        anchor = rng.choice(sorted(adjacency))
        clique = [anchor]
        candidates = sorted(adjacency[anchor])
        rng.shuffle(candidates)
        for other in candidates:
            if all(other in adjacency[member] for member in clique):
                clique.append(other)
        chosen = [anchor] + [u for u in clique[1:] if rng.random() < 0.5]
        adjacency[vertex] = set(chosen)
        for u in chosen:
            adjacency[u].add(vertex)
            edges.append((u, vertex))
    return build_graph(edges, labels=labels)


def random_hypergraph(
    points: int, rng: random.Random, max_intervals: int = MAX_RANDOM_INTERVALS
) -> IntervalHypergraph:
    count = rng.randint(1, max_intervals)
    intervals = []
    for index in range(1, count + 1):
        left, right = sorted((rng.randint(1, points), rng.randint(1, points)))
        intervals.append(Interval(f"I{index}", left, right))
    return IntervalHypergraph(n=points, intervals=tuple(intervals))


def generate(spec: GeneratorSpec) -> Graph | IntervalHypergraph:
    """Build the object described by ``spec``; identical specs give identical output"""
    rng = random.Random(spec.seed)
    family = spec.family
    logger.debug(f"Generating {family.value} (size={spec.size}, seed={spec.seed})")
    if family is GeneratorFamily.FIXTURE:
        manager = FixtureManager()
        if spec.fixture in manager.list_fixtures("hypergraph"):
            return manager.load_hypergraph(spec.fixture)
        return manager.load_graph(spec.fixture)
    if family is GeneratorFamily.RANDOM_INTERVAL:
        return model_graph(random_interval_model(spec.size, rng))
    if family is GeneratorFamily.RANDOM_PROPER_INTERVAL:
        return model_graph(random_proper_interval_model(spec.size, rng))
    if family is GeneratorFamily.RANDOM_GRAPH:
        return random_graph(spec.size, spec.edge_probability, rng)
    if family is GeneratorFamily.RANDOM_CHORDAL:
        return random_chordal_graph(spec.size, rng)
    return random_hypergraph(spec.size, rng)
