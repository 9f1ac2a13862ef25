"""Invariant checks for stretched models"""

import logging

from ..core.types import Violation
from ..graphs.graph import Graph, graph_isomorphic_small, intersection_graph
from .stretched import StretchedModel

logger = logging.getLogger(__name__)


def canonical_violations(model: StretchedModel) -> list[Violation]:
    """Every breached layout invariant of ``model``"""
    violations: list[Violation] = []
    intervals = model.hypergraph.intervals
    clique_path = model.clique_path

    for side, values in (
        ("left", [i.left for i in intervals]),
        ("right", [i.right for i in intervals]),
    ):
        if len(set(values)) != len(values):
            violations.append(
                Violation("shared-endpoint", side, f"{side} endpoints are not distinct")
            )

    layout = sorted(
        [p for gadget in model.gadgets for p in gadget.points()]
        + list(model.separators)
    )
    if layout != list(range(1, model.n + 1)):
        violations.append(
            Violation("layout", "points", "gadgets and separators do not tile 1..N")
        )
    expected_n = sum(len(g.starting) + len(g.ending) - 1 for g in model.gadgets) + max(
        len(model.gadgets) - 1, 0
    )
    if model.n != expected_n:
        violations.append(
            Violation("point-count", "N", f"N={model.n}, expected {expected_n}")
        )

    for gadget in model.gadgets:
        subject = f"D{gadget.index}"
        if gadget.size != len(gadget.starting) + len(gadget.ending) - 1:
            violations.append(Violation("gadget-size", subject, f"size {gadget.size}"))
        holders = model.vertices_at(gadget.zero)
        if holders != clique_path.clique(gadget.index):
            violations.append(
                Violation(
                    "zero-point",
                    subject,
                    f"z={gadget.zero} is contained in {sorted(holders)}",
                )
            )

    for vertex, (first, last) in clique_path.ranges.items():
        if vertex not in model.vertex_map:
            violations.append(Violation("unmapped", vertex, "no interval"))
            continue
        interval = model.interval_of(vertex)
        required = [g.zero for g in model.gadgets[first - 1 : last]]
        required += [s for s in model.separators if required[0] < s < required[-1]]
        missing = [p for p in required if not interval.contains(p)]
        if missing:
            violations.append(
                Violation("span", interval.id, f"misses required points {missing}")
            )
    return violations


def verify_canonical(graph: Graph, model: StretchedModel) -> bool:
    """Layout invariants hold and the intervals' intersection graph is ``graph``"""
    if set(model.vertex_map) != set(graph.vertices):
        return False
    violations = canonical_violations(model)
    if violations:
        logger.debug(f"Canonical model violations: {[str(v) for v in violations]}")
        return False
    rebuilt = intersection_graph(
        (interval.id, range(interval.left, interval.right + 1))
        for interval in model.hypergraph.intervals
    )
    return graph_isomorphic_small(graph, rebuilt, mapping_hint=model.vertex_map)
