"""Interval and proper-interval recognition through clique paths"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from itertools import combinations, permutations
from types import MappingProxyType

import networkx as nx

from ..core.errors import ContractError, NotIntervalGraphError
from ..core.types import NonIntervalReason, ProperIntervalFailure, Violation
from ..hyperkit.hypergraph import Interval, IntervalHypergraph
from .chordal import find_chordless_cycle, maximal_cliques_chordal
from .graph import Graph, connected_components

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CliquePath:
    """Maximal cliques Q_1..Q_t in linear order with per-vertex ranges"""

    cliques: tuple[frozenset[str], ...]
    ranges: Mapping[str, tuple[int, int]] = field(compare=False, repr=False)

    @classmethod
    def from_cliques(cls, cliques: list[frozenset[str]]) -> "CliquePath":
        """Derive ranges l(v), r(v) (1-based) from an ordered clique list"""
        first: dict[str, int] = {}
        last: dict[str, int] = {}
        for index, clique in enumerate(cliques, start=1):
            for vertex in clique:
                first.setdefault(vertex, index)
                last[vertex] = index
        ranges = {v: (first[v], last[v]) for v in sorted(first)}
        return cls(cliques=tuple(cliques), ranges=MappingProxyType(ranges))

    @property
    def t(self) -> int:
        return len(self.cliques)

    def clique(self, index: int) -> frozenset[str]:
        """Q_index, 1-based"""
        return self.cliques[index - 1]

    def left(self, vertex: str) -> int:
        return self.ranges[vertex][0]

    def right(self, vertex: str) -> int:
        return self.ranges[vertex][1]

    def vertices(self) -> list[str]:
        return list(self.ranges)

    def reversed(self) -> "CliquePath":
        return CliquePath.from_cliques(list(reversed(self.cliques)))


@dataclass(frozen=True)
class IntervalCheck:
    """Outcome of interval recognition"""

    clique_path: CliquePath | None
    reason: NonIntervalReason | None = None
    cycle: tuple[str, ...] | None = None

    @property
    def is_interval(self) -> bool:
        return self.clique_path is not None

    def describe(self) -> str:
        if self.reason is NonIntervalReason.NOT_CHORDAL:
            return f"not chordal: induced cycle {'-'.join(self.cycle or ())}"
        if self.reason is NonIntervalReason.NO_CONSECUTIVE_ORDER:
            return "chordal, but the maximal cliques admit no consecutive order"
        return "interval graph"


@dataclass(frozen=True)
class Claw:
    """Induced K_{1,3}"""

    center: str
    leaves: tuple[str, str, str]


@dataclass(frozen=True)
class ProperIntervalCheck:
    """Outcome of proper-interval recognition with its witness"""

    is_proper: bool
    failure: ProperIntervalFailure | None = None
    claw: Claw | None = None
    interval: IntervalCheck | None = None


def _order_component(cliques: list[frozenset[str]]) -> list[int] | None:
    """Consecutive arrangement of one connected component's cliques

    Backtracking over left-to-right placements. A vertex of the last clique
    that still occurs in an unplaced clique must be carried into the next
    one, and a vertex already left behind may never reappear. Failed
    ``(placed, last)`` states are memoized.
    """
    count = len(cliques)
    failed: set[tuple[frozenset[int], int]] = set()

    def extend(order: list[int], placed: frozenset[int], seen: frozenset[str]):
        if len(order) == count:
            return order
        last_index = order[-1]
        state = (placed, last_index)
        if state in failed:
            return None
        last = cliques[last_index]
        remaining = [j for j in range(count) if j not in placed]
        pending = frozenset().union(*(cliques[j] for j in remaining))
        carry = last & pending
        left_behind = seen - last
        for j in remaining:
            candidate = cliques[j]
            if not carry <= candidate or candidate & left_behind:
                continue
            if not candidate & last:
                continue
            found = extend(order + [j], placed | {j}, seen | candidate)
            if found is not None:
                return found
        failed.add(state)
        return None

    for start in range(count):
        found = extend([start], frozenset([start]), cliques[start])
        if found is not None:
            return found
    return None


def recognize_interval(graph: Graph) -> IntervalCheck:
    """Clique path of an interval graph, or the reason none exists

    Components are laid out by smallest contained label and their clique
    paths concatenated.
    """
    decomposition = maximal_cliques_chordal(graph)
    if decomposition is None:
        cycle = find_chordless_cycle(graph)
        return IntervalCheck(
            None, NonIntervalReason.NOT_CHORDAL, tuple(cycle) if cycle else None
        )

    ordered: list[frozenset[str]] = []
    for component in connected_components(graph):
        members = set(component)
        cliques = [c for c in decomposition.cliques if c <= members]
        order = _order_component(cliques)
        if order is None:
            logger.debug(
                f"No consecutive clique order for component starting {component[0]}"
            )
            return IntervalCheck(None, NonIntervalReason.NO_CONSECUTIVE_ORDER)
        ordered.extend(cliques[i] for i in order)
    return IntervalCheck(CliquePath.from_cliques(ordered))


def interval_clique_path(graph: Graph) -> CliquePath | None:
    """Clique path if ``graph`` is an interval graph, else None"""
    return recognize_interval(graph).clique_path


def require_clique_path(graph: Graph) -> CliquePath:
    check = recognize_interval(graph)
    if check.clique_path is None:
        raise NotIntervalGraphError(
            f"input is not an interval graph ({check.describe()})", check
        )
    return check.clique_path


def validate_clique_path(graph: Graph, clique_path: CliquePath) -> list[Violation]:
    """Violations of the clique-path invariants with respect to ``graph``"""
    violations: list[Violation] = []
    for index, clique in enumerate(clique_path.cliques, start=1):
        subject = f"Q{index}"
        if not graph.is_clique(sorted(clique)):
            violations.append(Violation("not-a-clique", subject, "contains a non-edge"))
            continue
        extenders = [
            v
            for v in graph.vertices
            if v not in clique and all(graph.adjacent(v, u) for u in clique)
        ]
        if extenders:
            violations.append(
                Violation("not-maximal", subject, f"extendable by {extenders[0]}")
            )
    for u, v in graph.edges():
        if not any(u in c and v in c for c in clique_path.cliques):
            violations.append(Violation("uncovered-edge", f"{u}-{v}", "in no clique"))
    for vertex in graph.vertices:
        holders = [i for i, c in enumerate(clique_path.cliques, start=1) if vertex in c]
        if not holders:
            violations.append(Violation("uncovered-vertex", vertex, "in no clique"))
            continue
        expected = list(range(holders[0], holders[-1] + 1))
        if holders != expected:
            violations.append(
                Violation("not-consecutive", vertex, f"cliques {holders}")
            )
        if clique_path.ranges.get(vertex) != (holders[0], holders[-1]):
            violations.append(
                Violation("range-mismatch", vertex, f"{clique_path.ranges.get(vertex)}")
            )
    for index in range(1, clique_path.t):
        a, b = clique_path.clique(index), clique_path.clique(index + 1)
        if a <= b or b <= a:
            violations.append(
                Violation("nested-neighbors", f"Q{index}", "equal or nested successor")
            )
    return violations


def vertex_ranges(clique_path: CliquePath) -> IntervalHypergraph:
    """The clique ranges as an interval hypergraph over points 1..t"""
    return IntervalHypergraph(
        n=clique_path.t,
        intervals=tuple(
            Interval(vertex, left, right)
            for vertex, (left, right) in clique_path.ranges.items()
        ),
    )


def reduce_twins(
    graph: Graph, clique_path: CliquePath | None = None
) -> tuple[Graph, dict[str, str]]:
    """Keep the smallest-labelled vertex of every identical clique range

    ``clique_path`` reuses an already computed clique path of ``graph``.
    """
    if clique_path is None:
        clique_path = interval_clique_path(graph)
    if clique_path is None:
        raise NotIntervalGraphError("reduce_twins requires an interval graph")
    representative: dict[tuple[int, int], str] = {}
    merged: dict[str, str] = {}
    for vertex in graph.vertices:
        span = clique_path.ranges[vertex]
        if span in representative:
            merged[vertex] = representative[span]
        else:
            representative[span] = vertex
    if not merged:
        return graph, {}
    logger.debug(f"Twin reduction merged {len(merged)} vertices")
    return graph.induced(representative.values()), merged


def twin_reduced_clique_path(
    graph: Graph, skip_twin_reduction: bool = False
) -> tuple[Graph, dict[str, str], CliquePath]:
    """Twin-reduced graph, its merge map and its clique path

    Interval recognition runs once for twin-free graphs and once more on
    the reduced graph when twins were merged.
    """
    clique_path = require_clique_path(graph)
    if skip_twin_reduction:
        return graph, {}, clique_path
    reduced, merged = reduce_twins(graph, clique_path)
    if merged:
        clique_path = require_clique_path(reduced)
    return reduced, merged, clique_path


def find_claw(graph: Graph) -> Claw | None:
    """First induced K_{1,3} in label order, or None"""
    for center in graph.vertices:
        for leaves in combinations(graph.neighbors(center), 3):
            if graph.is_independent(leaves):
                return Claw(center, leaves)
    return None


def is_proper_interval(graph: Graph) -> ProperIntervalCheck:
    """Interval and claw-free"""
    check = recognize_interval(graph)
    if not check.is_interval:
        return ProperIntervalCheck(False, ProperIntervalFailure.NOT_INTERVAL, None, check)
    claw = find_claw(graph)
    if claw is not None:
        return ProperIntervalCheck(False, ProperIntervalFailure.CLAW, claw, check)
    return ProperIntervalCheck(True, None, None, check)


def has_interval_model_bruteforce(graph: Graph, max_cliques: int = 8) -> bool:
    """Try every ordering of the maximal cliques (networkx enumeration)"""
    if graph.n == 0:
        return True
    nx_graph = graph.to_networkx()
    if not nx.is_chordal(nx_graph):
        return False
    cliques = [frozenset(c) for c in nx.find_cliques(nx_graph)]
    if len(cliques) > max_cliques:
        raise ContractError(f"too many cliques for brute force: {len(cliques)}")
    for order in permutations(cliques):
        if all(
            _consecutive([i for i, c in enumerate(order) if v in c])
            for v in graph.vertices
        ):
            return True
    return False


def _consecutive(indices: list[int]) -> bool:
    return bool(indices) and indices[-1] - indices[0] + 1 == len(indices)

