"""Backbone path construction, cover profiles and the block partition

The backbone walks the clique path left to right: each step picks, among
the vertices of the clique where the previous step ends that are not in
the previous cover clique, the one reaching furthest right. The clique
cover of the walked neighborhoods accumulates along the way.

Disconnected graphs are walked one component at a time; every component
contributes its own segment.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from ..canonical.stretched import StretchedModel
from ..core.errors import ContractError
from ..graphs.interval import CliquePath
from ..hyperkit.hypergraph import HittingSet, exact_hit_check
from .covers import neighborhood_clique_cover, range_clique_cover

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BackboneStep:
    """One vertex v_i with Q_r^i, Q_r'^i and C(N[v_i])"""

    vertex: str
    right_clique: int
    previous_clique: int | None
    neighborhood_cover: tuple[int, ...]
    widened: bool = False


@dataclass(frozen=True)
class BackboneSegment:
    """Backbone of one connected component"""

    steps: tuple[BackboneStep, ...]
    cover: tuple[int, ...]

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(step.vertex for step in self.steps)


@dataclass(frozen=True)
class BackbonePath:
    """Backbone vertices v_1..v_p and accumulated cover K_1..K_alpha"""

    segments: tuple[BackboneSegment, ...]

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(v for segment in self.segments for v in segment.vertices)

    @property
    def steps(self) -> tuple[BackboneStep, ...]:
        return tuple(step for segment in self.segments for step in segment.steps)

    @property
    def cover(self) -> tuple[int, ...]:
        return tuple(index for segment in self.segments for index in segment.cover)


@dataclass(frozen=True)
class CoverProfile:
    """Sizes |C(N[v_i])| along the backbone"""

    sizes: tuple[int, ...]
    segment_sizes: tuple[tuple[int, ...], ...]

    @property
    def has_large(self) -> bool:
        """Some backbone vertex needs four or more cliques"""
        return any(size >= 4 for size in self.sizes)

    @property
    def threes(self) -> int:
        return sum(1 for size in self.sizes if size == 3)

    @property
    def adjacent_threes(self) -> bool:
        return any(
            a == 3 and b == 3
            for sizes in self.segment_sizes
            for a, b in zip(sizes, sizes[1:], strict=False)
        )

    @property
    def admits_partition(self) -> bool:
        return not self.has_large and all(
            sum(1 for size in sizes if size == 3) <= 1 for sizes in self.segment_sizes
        )


def _component_spans(clique_path: CliquePath) -> list[tuple[int, int]]:
    """Maximal runs of cliques linked by shared vertices"""
    spans: list[tuple[int, int]] = []
    start = 1
    for index in range(1, clique_path.t):
        if not clique_path.clique(index) & clique_path.clique(index + 1):
            spans.append((start, index))
            start = index + 1
    if clique_path.t:
        spans.append((start, clique_path.t))
    return spans


def _furthest_right(clique_path: CliquePath, candidates: Iterable[str]) -> str:
    return min(candidates, key=lambda v: (-clique_path.right(v), v))


def _walk_component(clique_path: CliquePath, first: int, last: int) -> BackboneSegment:
    vertex = _furthest_right(clique_path, clique_path.clique(first))
    right = clique_path.right(vertex)
    own_cover = neighborhood_clique_cover(clique_path, vertex)
    accumulated = list(own_cover)
    previous = own_cover[-2] if len(own_cover) > 1 else None
    steps = [BackboneStep(vertex, right, previous, tuple(own_cover))]

    while right != last:
        pool = clique_path.clique(right)
        if previous is not None:
            pool = pool - clique_path.clique(previous)
        vertex = _furthest_right(clique_path, pool)
        widened = clique_path.right(vertex) <= right
        if widened:
            # Q_r minus Q_r' reaches no further right; take the whole clique
            logger.debug(f"Backbone widened its choice at clique {right}")
            vertex = _furthest_right(clique_path, clique_path.clique(right))
        if clique_path.right(vertex) <= right:
            raise ContractError(
                f"backbone stalled at clique {right}; the clique path is not valid"
            )
        start, right = right + 1, clique_path.right(vertex)
        uncovered = [
            v
            for v, (v_left, v_right) in clique_path.ranges.items()
            if v_left <= right
            and v_right >= start
            and not any(v_left <= k <= v_right for k in accumulated)
        ]
        accumulated.extend(range_clique_cover(clique_path, start, right, uncovered))
        previous = max((k for k in accumulated if k < right), default=None)
        steps.append(
            BackboneStep(
                vertex,
                right,
                previous,
                tuple(neighborhood_clique_cover(clique_path, vertex)),
                widened,
            )
        )
    return BackboneSegment(tuple(steps), tuple(accumulated))


def construct_backbone(clique_path: CliquePath) -> BackbonePath:
    """Run the backbone walk over every component of the clique path"""
    segments = tuple(
        _walk_component(clique_path, first, last)
        for first, last in _component_spans(clique_path)
    )
    backbone = BackbonePath(segments)
    logger.debug(
        f"Backbone {list(backbone.vertices)} with cover {list(backbone.cover)}"
    )
    return backbone


def cover_size_profile(backbone: BackbonePath, clique_path: CliquePath) -> CoverProfile:
    segment_sizes = tuple(
        tuple(
            len(neighborhood_clique_cover(clique_path, vertex))
            for vertex in segment.vertices
        )
        for segment in backbone.segments
    )
    return CoverProfile(
        sizes=tuple(size for sizes in segment_sizes for size in sizes),
        segment_sizes=segment_sizes,
    )


def triple_intersection_check(backbone: BackbonePath, clique_path: CliquePath) -> bool:
    """Every three consecutive cover cliques share at most one vertex"""
    cliques = [clique_path.clique(index) for index in backbone.cover]
    return all(
        len(a & b & c) <= 1
        for a, b, c in zip(cliques, cliques[1:], cliques[2:], strict=False)
    )


def _segment_blocks(
    segment: BackboneSegment, sizes: tuple[int, ...], clique_path: CliquePath
) -> list[frozenset[str]]:
    cover = [clique_path.clique(index) for index in segment.cover]
    alpha = len(cover)

    p = len(segment.steps)
    # index of the cover-size-3 vertex, p + 1 when there is none
    anchor = next((i for i, size in enumerate(sizes, start=1) if size == 3), p + 1)
    # without such a vertex K_{p+2} and K_{p+3} are empty
    limit = alpha if anchor <= p else min(alpha, p + 1)

    def k(index: int) -> frozenset[str]:
        return cover[index - 1] if 1 <= index <= limit else frozenset()

    blocks: dict[int, frozenset[str]] = {}
    for j in range(1, alpha + 1):
        if j <= anchor:
            blocks[j] = k(j) - k(j + 1)
        elif j == anchor + 1:
            blocks[j] = k(j) - (k(anchor) | k(anchor + 2))
        elif j == anchor + 2:
            middle = k(anchor + 1) - (k(anchor) | k(anchor + 2))
            blocks[j] = k(j) - middle
        else:
            blocks[j] = k(j) - k(j + 1)
    return [blocks[j] for j in range(1, alpha + 1)]


def build_partition_cover(
    backbone: BackbonePath, clique_path: CliquePath
) -> list[frozenset[str]] | None:
    """Blocks B_1..B_alpha, or None when they fail to partition V into cliques"""
    profile = cover_size_profile(backbone, clique_path)
    if not profile.admits_partition:
        raise ContractError(
            "block partition needs cover sizes below 4 and at most one 3 per "
            f"component, got {list(profile.sizes)}"
        )
    blocks: list[frozenset[str]] = []
    for segment, sizes in zip(backbone.segments, profile.segment_sizes, strict=True):
        blocks.extend(_segment_blocks(segment, sizes, clique_path))

    problems = partition_problems(blocks, clique_path)
    if problems:
        logger.warning(f"Block partition rejected: {'; '.join(problems)}")
        return None
    return blocks


def partition_problems(
    blocks: list[frozenset[str]], clique_path: CliquePath
) -> list[str]:
    """Reasons ``blocks`` is not a partition of V into cliques"""
    problems: list[str] = []
    seen: set[str] = set()
    for position, block in enumerate(blocks, start=1):
        if not block:
            problems.append(f"block {position} is empty")
        overlap = seen & block
        if overlap:
            problems.append(f"block {position} repeats {sorted(overlap)}")
        seen |= block
        if block and not any(block <= clique for clique in clique_path.cliques):
            problems.append(f"block {position} is not a clique")
    missing = set(clique_path.ranges) - seen
    if missing:
        problems.append(f"vertices {sorted(missing)} are in no block")
    return problems


def realizing_points(model: StretchedModel, block: frozenset[str]) -> list[int]:
    """Points of the model contained in exactly the intervals of ``block``"""
    return [
        point for point in range(1, model.n + 1) if model.vertices_at(point) == block
    ]


def extract_hitting_points(
    model: StretchedModel, blocks: list[frozenset[str]]
) -> HittingSet | None:
    """One realizing point per block, or None if some block has none"""
    points: list[int] = []
    for block in blocks:
        candidates = realizing_points(model, block)
        if not candidates:
            logger.warning(
                f"Block {sorted(block)} is realized by no point of the canonical model"
            )
            return None
        points.append(candidates[0])
    hitting = HittingSet.of(points)
    if len(hitting) != len(points) or not exact_hit_check(
        model.hypergraph, hitting
    ).is_exact:
        logger.warning("Realizing points do not form an exact hitting set")
        return None
    return hitting
