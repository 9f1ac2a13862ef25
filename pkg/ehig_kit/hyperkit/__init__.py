"""Interval hypergraphs and their hitting-set solvers"""

from .formats import format_hypergraph, parse_hypergraph
from .hypergraph import (
    HitReport,
    HittingSet,
    Interval,
    IntervalHypergraph,
    exact_hit_check,
    is_proper,
    point_loads,
    validate,
)
from .solvers import (
    MembershipResult,
    brute_force_ehs,
    brute_force_min_membership,
    exactly_hittable,
    greedy_stabbing,
    min_membership_hitting,
    proper_greedy_ehs,
)

__all__ = [
    "HitReport",
    "HittingSet",
    "Interval",
    "IntervalHypergraph",
    "MembershipResult",
    "brute_force_ehs",
    "brute_force_min_membership",
    "exact_hit_check",
    "exactly_hittable",
    "format_hypergraph",
    "greedy_stabbing",
    "is_proper",
    "min_membership_hitting",
    "parse_hypergraph",
    "point_loads",
    "proper_greedy_ehs",
    "validate",
]
