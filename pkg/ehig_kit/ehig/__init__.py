"""Exactly hittable interval graph recognition"""

from .backbone import (
    BackbonePath,
    BackboneSegment,
    BackboneStep,
    CoverProfile,
    build_partition_cover,
    construct_backbone,
    cover_size_profile,
    extract_hitting_points,
    partition_problems,
    realizing_points,
    triple_intersection_check,
)
from .covers import neighborhood_clique_cover, private_vertices, range_clique_cover
from .recognizer import RecognitionCertificate, recognize, verify_certificate
from .witness import (
    ForbiddenWitness,
    extract_forbidden_witness,
    induced_paths,
    max_independent_neighbors,
    verify_forbidden_witness,
)

__all__ = [
    "BackbonePath",
    "BackboneSegment",
    "BackboneStep",
    "CoverProfile",
    "ForbiddenWitness",
    "RecognitionCertificate",
    "build_partition_cover",
    "construct_backbone",
    "cover_size_profile",
    "extract_forbidden_witness",
    "extract_hitting_points",
    "induced_paths",
    "max_independent_neighbors",
    "neighborhood_clique_cover",
    "partition_problems",
    "private_vertices",
    "range_clique_cover",
    "realizing_points",
    "recognize",
    "triple_intersection_check",
    "verify_certificate",
    "verify_forbidden_witness",
]
