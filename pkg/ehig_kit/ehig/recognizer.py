"""EHIG recognition with certificates in both directions

Pipeline: twin reduction, clique path, canonical model, minimum membership
on the canonical model. k = 1 yields the exact hitting set and the vertex
partition it induces; k > 1 triggers forbidden-witness extraction.

On the exactly hittable side the backbone block partition is also built and
its realizing points looked up. Its failures are logged and never change
the verdict.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from ..canonical.stretched import StretchedModel, build_canonical
from ..canonical.verification import verify_canonical
from ..core.config import DEFAULT_PATH_CAP
from ..core.errors import EHIGError
from ..core.types import Verdict
from ..graphs.graph import Graph
from ..graphs.interval import (
    CliquePath,
    twin_reduced_clique_path,
    validate_clique_path,
)
from ..hyperkit.hypergraph import HittingSet, exact_hit_check
from ..hyperkit.solvers import min_membership_hitting
from .backbone import (
    BackbonePath,
    build_partition_cover,
    construct_backbone,
    cover_size_profile,
    extract_hitting_points,
    triple_intersection_check,
)
from .witness import (
    ForbiddenWitness,
    extract_forbidden_witness,
    verify_forbidden_witness,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RecognitionCertificate:
    verdict: Verdict
    graph: Graph = field(repr=False)
    reduced: Graph = field(repr=False)
    model: StretchedModel = field(repr=False)
    mmsc_k: int
    hitting: HittingSet | None = None
    partition: tuple[frozenset[str], ...] = ()
    witness: ForbiddenWitness | None = None
    backbone: BackbonePath | None = field(default=None, repr=False)
    backbone_points: HittingSet | None = None
    merged_twins: Mapping[str, str] = field(
        default_factory=lambda: MappingProxyType({})
    )

    @property
    def is_ehig(self) -> bool:
        return self.verdict is Verdict.EHIG


def verify_certificate(certificate: RecognitionCertificate) -> bool:
    """Re-check a certificate without trusting the pipeline that produced it"""
    if not verify_canonical(certificate.reduced, certificate.model):
        return False
    if certificate.is_ehig:
        if certificate.hitting is None:
            return False
        check = exact_hit_check(certificate.model.hypergraph, certificate.hitting)
        if not check.is_exact:
            return False
        covered = [v for block in certificate.partition for v in block]
        return sorted(covered) == list(certificate.graph.vertices) and all(
            certificate.graph.is_clique(sorted(block))
            for block in certificate.partition
        )
    if certificate.witness is None:
        return certificate.mmsc_k > 1
    return verify_forbidden_witness(certificate.graph, certificate.witness)


def recognize(
    graph: Graph,
    skip_twin_reduction: bool = False,
    reverse_clique_path: bool = False,
    path_cap: int = DEFAULT_PATH_CAP,
) -> RecognitionCertificate:
    """Decide exact hittability of an interval graph

    Args:
        graph: The input graph; it must be an interval graph.
        skip_twin_reduction: Keep vertices with identical clique ranges. The
            canonical construction then refuses graphs that have twins.
        reverse_clique_path: Build everything on the mirrored clique path.
        path_cap: Longest induced path tried by the exhaustive witness search.

    Returns:
        A certificate that ``verify_certificate`` accepts: exact hitting
        points with their vertex partition, or a forbidden witness.

    Raises:
        NotIntervalGraphError: If ``graph`` is not an interval graph.
        ContractError: If twins are kept and the canonical model refuses them.
    """
    reduced, merged, clique_path = twin_reduced_clique_path(
        graph, skip_twin_reduction
    )
    if reverse_clique_path:
        clique_path = clique_path.reversed()
    if logger.isEnabledFor(logging.DEBUG):
        for violation in validate_clique_path(reduced, clique_path):
            logger.debug(f"Clique path violation: {violation}")

    model = build_canonical(clique_path)
    membership = min_membership_hitting(model.hypergraph)
    merged_twins = MappingProxyType(dict(sorted(merged.items())))
    logger.debug(f"Canonical model N={model.n}, minimum membership k={membership.k}")
    backbone = construct_backbone(clique_path)

    if membership.k <= 1:
        backbone_points = _backbone_hitting_points(model, clique_path, backbone)
        hitting = membership.points
        if not exact_hit_check(model.hypergraph, hitting).is_exact:
            raise EHIGError("minimum membership k=1 without an exact hitting set")
        partition = _induced_partition(model, hitting, merged)
        return RecognitionCertificate(
            verdict=Verdict.EHIG,
            graph=graph,
            reduced=reduced,
            model=model,
            mmsc_k=membership.k,
            hitting=hitting,
            partition=partition,
            backbone=backbone,
            backbone_points=backbone_points,
            merged_twins=merged_twins,
        )

    witness = extract_forbidden_witness(reduced, clique_path, backbone, path_cap)
    if witness is not None and not verify_forbidden_witness(graph, witness):
        logger.warning("Extracted witness does not verify on the input graph")
        witness = None
    return RecognitionCertificate(
        verdict=Verdict.NOT_EHIG,
        graph=graph,
        reduced=reduced,
        model=model,
        mmsc_k=membership.k,
        witness=witness,
        backbone=backbone,
        merged_twins=merged_twins,
    )


def _induced_partition(
    model: StretchedModel, hitting: HittingSet, merged: Mapping[str, str]
) -> tuple[frozenset[str], ...]:
    """Per hitting point, the vertices whose intervals contain it, twins included"""
    blocks = []
    for point in hitting:
        block = set(model.vertices_at(point))
        block.update(twin for twin, kept in merged.items() if kept in block)
        blocks.append(frozenset(block))
    seen = [v for block in blocks for v in block]
    if len(seen) != len(set(seen)):
        raise EHIGError("hitting points induce overlapping blocks")
    return tuple(blocks)


def _backbone_hitting_points(
    model: StretchedModel, clique_path: CliquePath, backbone: BackbonePath
) -> HittingSet | None:
    """Hitting points read off the backbone block partition, when it works

    Diagnostics only: the verdict and the certificate come from the minimum
    membership points. Every failure is logged as a warning.
    """
    if not triple_intersection_check(backbone, clique_path):
        logger.warning(
            f"Backbone cover {list(backbone.cover)} has three consecutive "
            "cliques sharing more than one vertex"
        )
    profile = cover_size_profile(backbone, clique_path)
    if not profile.admits_partition:
        logger.warning(
            f"Block partition skipped: backbone cover sizes {list(profile.sizes)}"
        )
        return None
    blocks = build_partition_cover(backbone, clique_path)
    if blocks is None:
        return None
    points = extract_hitting_points(model, blocks)
    if points is not None:
        logger.debug(f"Backbone blocks realized by points {list(points)}")
    return points
