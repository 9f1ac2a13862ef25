"""Minimum clique covers read off a clique path

A set of clique indices covers a vertex when it stabs the vertex's clique
range, so minimum covers are interval stabbing problems solved greedily by
earliest right end.
"""

from collections.abc import Iterable

from ..core.errors import ContractError
from ..graphs.interval import CliquePath


def _stab(spans: Iterable[tuple[int, int]]) -> list[int]:
    chosen: list[int] = []
    last = 0
    for left, right in sorted(spans, key=lambda span: (span[1], span[0])):
        if left > last:
            last = right
            chosen.append(right)
    return chosen


def closed_neighborhood(clique_path: CliquePath, vertex: str) -> list[str]:
    """N[v]: vertices whose ranges meet the range of ``vertex``"""
    left, right = clique_path.ranges[vertex]
    return [
        u
        for u, (u_left, u_right) in clique_path.ranges.items()
        if u_left <= right and left <= u_right
    ]


def neighborhood_clique_cover(clique_path: CliquePath, vertex: str) -> list[int]:
    """C(N[v]) as ascending clique indices; the last index is r(v)"""
    left, right = clique_path.ranges[vertex]
    spans = [
        (max(u_left, left), min(u_right, right))
        for u_left, u_right in (
            clique_path.ranges[u] for u in closed_neighborhood(clique_path, vertex)
        )
    ]
    chosen = _stab(spans)
    if chosen and chosen[-1] != right:
        # move the final stab onto r(v) when every span it served still reaches it
        floor = chosen[-2] if len(chosen) > 1 else 0
        served = [s for s in spans if s[0] > floor and s[0] <= chosen[-1] <= s[1]]
        if all(s[1] >= right for s in served):
            chosen[-1] = right
    return chosen


def range_clique_cover(
    clique_path: CliquePath, start: int, stop: int, targets: Iterable[str]
) -> list[int]:
    """C(Q_start..Q_stop): minimum indices in ``[start, stop]`` covering ``targets``"""
    if start > stop:
        raise ContractError(f"empty clique range {start}..{stop}")
    spans = []
    for vertex in sorted(targets):
        left, right = clique_path.ranges[vertex]
        if right < start or left > stop:
            raise ContractError(
                f"vertex {vertex} with range [{left},{right}] lies outside "
                f"cliques {start}..{stop}"
            )
        spans.append((max(left, start), min(right, stop)))
    return _stab(spans)


def private_vertices(
    clique_path: CliquePath, cover: Iterable[int], clique: int
) -> list[str]:
    """Vertices of Q_clique that lie in no other clique of ``cover``"""
    others = [index for index in cover if index != clique]
    return sorted(
        v
        for v in clique_path.clique(clique)
        if not any(clique_path.left(v) <= i <= clique_path.right(v) for i in others)
    )
