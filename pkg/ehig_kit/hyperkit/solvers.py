"""Exact hitting, minimum membership and greedy solvers for interval hypergraphs"""

import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np

from ..core.config import DEFAULT_MAX_MEMBERSHIP_POINTS, DEFAULT_MAX_POINTS
from ..core.errors import ContractError, EHIGError, GuardExceededError
from .hypergraph import (
    HittingSet,
    IntervalHypergraph,
    exact_hit_check,
    is_proper,
    point_loads,
)

logger = logging.getLogger(__name__)

_SOURCE = "source"
_CHUNK_BITS = 16


@dataclass(frozen=True)
class MembershipResult:
    """Minimax hits per interval together with a witness point set"""

    k: int
    points: HittingSet

    @property
    def vacuous(self) -> bool:
        """True for the empty hypergraph, where k is undefined"""
        return self.k == 0

    @property
    def exactly_hittable(self) -> bool:
        return self.k <= 1


def greedy_stabbing(hypergraph: IntervalHypergraph) -> HittingSet:
    """Minimum stabbing set by earliest right endpoint"""
    points: list[int] = []
    last = 0
    for interval in sorted(hypergraph.intervals, key=lambda i: (i.right, i.left)):
        if interval.left > last:
            last = interval.right
            points.append(last)
    return HittingSet(tuple(points))


def _constraint_graph(hypergraph: IntervalHypergraph, k: int) -> nx.DiGraph:
    """Difference constraints on prefix sums y_0..y_n as a weighted digraph

    An edge ``u -> v`` of weight ``w`` encodes ``y_v - y_u <= w``.
    """
    weights: dict[tuple[int, int], int] = {}

    def bound(u: int, v: int, w: int) -> None:
        if (u, v) not in weights or w < weights[(u, v)]:
            weights[(u, v)] = w

    for point in range(1, hypergraph.n + 1):
        bound(point - 1, point, 1)
        bound(point, point - 1, 0)
    for interval in hypergraph.intervals:
        bound(interval.left - 1, interval.right, k)
        bound(interval.right, interval.left - 1, -1)

    graph = nx.DiGraph()
    graph.add_nodes_from(range(hypergraph.n + 1))
    graph.add_weighted_edges_from((u, v, w) for (u, v), w in sorted(weights.items()))
    graph.add_weighted_edges_from(
        (_SOURCE, node, 0) for node in range(hypergraph.n + 1)
    )
    return graph


def _solve_for_k(hypergraph: IntervalHypergraph, k: int) -> HittingSet | None:
    """Point set hitting every interval between 1 and k times, if one exists"""
    graph = _constraint_graph(hypergraph, k)
    try:
        distance = nx.single_source_bellman_ford_path_length(graph, _SOURCE)
    except nx.NetworkXUnbounded:
        return None
    loads = point_loads(hypergraph)
    chosen = [
        point
        for point in range(1, hypergraph.n + 1)
        if distance[point] - distance[point - 1] == 1 and loads[point] > 0
    ]
    return HittingSet(tuple(chosen))


def min_membership_hitting(hypergraph: IntervalHypergraph) -> MembershipResult:
    """Smallest k such that some point set hits every interval 1..k times"""
    if not hypergraph.intervals:
        logger.debug("Empty hypergraph: vacuous membership result")
        return MembershipResult(k=0, points=HittingSet())

    # the greedy stabbing set is feasible for its own worst interval count
    greedy = greedy_stabbing(hypergraph)
    upper = max(exact_hit_check(hypergraph, greedy).counts.values())
    low, high = 1, upper
    best = greedy
    while low < high:
        middle = (low + high) // 2
        witness = _solve_for_k(hypergraph, middle)
        if witness is None:
            low = middle + 1
        else:
            high = middle
            best = witness

    counts = exact_hit_check(hypergraph, best).counts.values()
    if min(counts) < 1 or max(counts) > low:
        raise EHIGError(f"membership witness violates the bound k={low}")
    logger.debug(
        f"Minimum membership k={low} (greedy bound {upper}) with "
        f"{len(best)} points"
    )
    return MembershipResult(k=low, points=best)


def exactly_hittable(hypergraph: IntervalHypergraph) -> HittingSet | None:
    """An exact hitting set if one exists, else None"""
    if not hypergraph.intervals:
        return HittingSet()
    result = min_membership_hitting(hypergraph)
    if result.k != 1:
        return None
    if not exact_hit_check(hypergraph, result.points).is_exact:
        raise EHIGError("membership solver returned a non-exact witness for k=1")
    return result.points


def brute_force_ehs(
    hypergraph: IntervalHypergraph, point_budget: int = DEFAULT_MAX_POINTS
) -> HittingSet | None:
    """Lexicographically smallest exact hitting set by exhaustive search

    Only points covered by some interval are considered. Including a point
    before excluding it visits candidate sets in lexicographic order, so the
    first complete set found is the smallest.
    """
    if hypergraph.n > point_budget:
        raise GuardExceededError("brute_force_ehs point guard", point_budget, hypergraph.n)
    if not hypergraph.intervals:
        return HittingSet()

    candidates = hypergraph.covered_points()
    index = {interval.id: i for i, interval in enumerate(hypergraph.intervals)}
    containing = {
        point: [index[i.id] for i in hypergraph.containing(point)]
        for point in candidates
    }
    ending = {point: [] for point in candidates}
    for interval in hypergraph.intervals:
        ending[interval.right].append(index[interval.id])

    counts = [0] * hypergraph.m
    chosen: list[int] = []

    def closed(point: int) -> bool:
        return all(counts[i] == 1 for i in ending[point])

    def search(position: int) -> bool:
        if position == len(candidates):
            return True
        point = candidates[position]
        if all(counts[i] == 0 for i in containing[point]):
            for i in containing[point]:
                counts[i] += 1
            chosen.append(point)
            if closed(point) and search(position + 1):
                return True
            chosen.pop()
            for i in containing[point]:
                counts[i] -= 1
        return closed(point) and search(position + 1)

    if search(0):
        return HittingSet(tuple(chosen))
    return None


def brute_force_min_membership(
    hypergraph: IntervalHypergraph,
    point_budget: int = DEFAULT_MAX_MEMBERSHIP_POINTS,
) -> MembershipResult:
    """Exhaustive minimax over all subsets of covered points"""
    if hypergraph.n > point_budget:
        raise GuardExceededError(
            "brute_force_min_membership point guard", point_budget, hypergraph.n
        )
    if not hypergraph.intervals:
        return MembershipResult(k=0, points=HittingSet())

    candidates = np.array(hypergraph.covered_points(), dtype=np.int64)
    incidence = np.array(
        [
            [interval.contains(int(point)) for interval in hypergraph.intervals]
            for point in candidates
        ],
        dtype=np.int32,
    )
    bits = np.arange(len(candidates), dtype=np.int64)
    total = 1 << len(candidates)
    chunk = 1 << _CHUNK_BITS

    best_k = hypergraph.m + 1
    best_mask = -1
    for start in range(1, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        selection = ((masks[:, None] >> bits) & 1).astype(np.int32)
        counts = selection @ incidence
        feasible = counts.min(axis=1) >= 1
        if not feasible.any():
            continue
        worst = np.where(feasible, counts.max(axis=1), hypergraph.m + 1)
        position = int(np.argmin(worst))
        if worst[position] < best_k:
            best_k = int(worst[position])
            best_mask = int(masks[position])

    points = [int(candidates[b]) for b in range(len(candidates)) if best_mask >> b & 1]
    return MembershipResult(k=best_k, points=HittingSet(tuple(points)))


def proper_greedy_ehs(hypergraph: IntervalHypergraph) -> HittingSet:
    """Exact hitting set of a proper family: take the right endpoint of the
    unhit interval with the smallest left endpoint, repeatedly"""
    if not is_proper(hypergraph):
        raise ContractError(
            "proper_greedy_ehs requires a proper interval hypergraph; "
            "use min_membership_hitting for nested families"
        )
    distinct = sorted({(i.left, i.right) for i in hypergraph.intervals})
    points: list[int] = []
    last = 0
    for left, right in distinct:
        if left > last:
            last = right
            points.append(right)
    return HittingSet(tuple(points))
