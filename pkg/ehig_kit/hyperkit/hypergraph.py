"""Interval hypergraphs, hitting sets and exact-hit checking"""

from bisect import bisect_left, bisect_right
from collections.abc import Iterable
from dataclasses import dataclass

from ..core.errors import HypergraphInputError
from ..core.types import Violation


@dataclass(frozen=True)
class Interval:
    """A labelled integer interval ``[left, right]``"""

    id: str
    left: int
    right: int

    def contains(self, point: int) -> bool:
        return self.left <= point <= self.right

    def strictly_contains(self, other: "Interval") -> bool:
        """True if ``other`` is nested in this interval and not equal to it"""
        return (
            self.left <= other.left
            and other.right <= self.right
            and (self.left, self.right) != (other.left, other.right)
        )

    def __str__(self) -> str:
        return f"{self.id}=[{self.left},{self.right}]"


@dataclass(frozen=True)
class IntervalHypergraph:
    """Points ``1..n`` together with an ordered list of intervals"""

    n: int
    intervals: tuple[Interval, ...] = ()

    @classmethod
    def create(
        cls, n: int, intervals: Iterable[tuple[str, int, int] | Interval]
    ) -> "IntervalHypergraph":
        """Build a hypergraph and reject it if any invariant is breached"""
        items = tuple(
            item if isinstance(item, Interval) else Interval(*item)
            for item in intervals
        )
        hypergraph = cls(n=n, intervals=items)
        violations = validate(hypergraph)
        if violations:
            raise HypergraphInputError(
                "invalid interval hypergraph: "
                + "; ".join(str(violation) for violation in violations)
            )
        return hypergraph

    @property
    def m(self) -> int:
        return len(self.intervals)

    def ids(self) -> list[str]:
        return [interval.id for interval in self.intervals]

    def get(self, interval_id: str) -> Interval:
        for interval in self.intervals:
            if interval.id == interval_id:
                return interval
        raise KeyError(interval_id)

    def containing(self, point: int) -> list[Interval]:
        """Intervals that contain ``point``, in list order"""
        return [interval for interval in self.intervals if interval.contains(point)]

    def covered_points(self) -> list[int]:
        """Points contained in at least one interval, ascending"""
        return [point for point, load in enumerate(point_loads(self)) if load > 0]


@dataclass(frozen=True)
class HittingSet:
    """A strictly increasing set of points"""

    points: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.points, self.points[1:], strict=False)):
            raise HypergraphInputError(
                f"hitting set points must be strictly increasing: {self.points}"
            )

    @classmethod
    def of(cls, points: Iterable[int]) -> "HittingSet":
        return cls(tuple(sorted(set(points))))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point: object) -> bool:
        return point in self.points


@dataclass(frozen=True)
class HitReport:
    """Per-interval hit counts of a point set"""

    counts: dict[str, int]
    is_exact: bool

    def over_hit(self) -> list[str]:
        return [interval_id for interval_id, c in self.counts.items() if c > 1]

    def missed(self) -> list[str]:
        return [interval_id for interval_id, c in self.counts.items() if c == 0]


def validate(hypergraph: IntervalHypergraph) -> list[Violation]:
    """Return one violation per breached hypergraph invariant"""
    violations: list[Violation] = []
    if hypergraph.intervals and hypergraph.n < 1:
        violations.append(
            Violation(
                "empty-universe",
                "n",
                f"n={hypergraph.n} but {hypergraph.m} intervals are present",
            )
        )
    seen: set[str] = set()
    for interval in hypergraph.intervals:
        if interval.id in seen:
            violations.append(
                Violation("duplicate-id", interval.id, "interval id is not unique")
            )
        seen.add(interval.id)
        if interval.left > interval.right:
            violations.append(
                Violation(
                    "endpoint-order",
                    interval.id,
                    f"left endpoint {interval.left} exceeds right endpoint "
                    f"{interval.right}",
                )
            )
        for endpoint in (interval.left, interval.right):
            if not 1 <= endpoint <= max(hypergraph.n, 0):
                violations.append(
                    Violation(
                        "out-of-range",
                        interval.id,
                        f"endpoint {endpoint} outside 1..{hypergraph.n}",
                    )
                )
    return violations


def point_loads(hypergraph: IntervalHypergraph) -> list[int]:
    """Number of intervals containing each point; index 0 is unused"""
    delta = [0] * (hypergraph.n + 2)
    for interval in hypergraph.intervals:
        delta[interval.left] += 1
        delta[interval.right + 1] -= 1
    loads = [0] * (hypergraph.n + 1)
    running = 0
    for point in range(1, hypergraph.n + 1):
        running += delta[point]
        loads[point] = running
    return loads


def exact_hit_check(
    hypergraph: IntervalHypergraph, hitting_set: HittingSet | Iterable[int]
) -> HitReport:
    """Count how often each interval is hit; exact means every count is 1"""
    if not isinstance(hitting_set, HittingSet):
        hitting_set = HittingSet.of(hitting_set)
    points = list(hitting_set.points)
    for point in points:
        if not 1 <= point <= hypergraph.n:
            raise HypergraphInputError(
                f"point {point} outside 1..{hypergraph.n}"
            )
    counts = {
        interval.id: bisect_right(points, interval.right)
        - bisect_left(points, interval.left)
        for interval in hypergraph.intervals
    }
    is_exact = all(count == 1 for count in counts.values())
    return HitReport(counts=counts, is_exact=is_exact)


def is_proper(hypergraph: IntervalHypergraph) -> bool:
    """True iff no interval strictly contains another (identical pairs allowed)"""
    distinct = sorted({(i.left, i.right) for i in hypergraph.intervals})
    # after dedup, proper iff left and right endpoints both strictly increase
    for (left_a, right_a), (left_b, right_b) in zip(
        distinct, distinct[1:], strict=False
    ):
        if left_a == left_b or right_b <= right_a:
            return False
    return True
