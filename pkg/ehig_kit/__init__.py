"""EHIG toolkit - exactly hittable interval graphs

Recognition of interval graphs that admit an interval model with an exact
hitting set, with a certificate either way: the hitting points of the
canonical model, or an induced path whose neighbourhood holds too many
independent vertices.
"""

from .canonical.stretched import StretchedModel, build_canonical
from .canonical.verification import verify_canonical
from .cli.main import main as cli_main
from .core.errors import (
    ContractError,
    EHIGError,
    FormatError,
    GuardExceededError,
    InputError,
    NotIntervalGraphError,
)
from .core.types import Verdict
from .ehig.recognizer import RecognitionCertificate, recognize, verify_certificate
from .ehig.witness import ForbiddenWitness, verify_forbidden_witness
from .graphs.formats import format_graph, parse_graph
from .graphs.graph import Graph, build_graph
from .graphs.interval import CliquePath, recognize_interval
from .hyperkit.formats import format_hypergraph, parse_hypergraph
from .hyperkit.hypergraph import HittingSet, IntervalHypergraph, exact_hit_check
from .hyperkit.solvers import exactly_hittable, min_membership_hitting
from .models.set_system import harary_model
from .models.subtree import chordal_subtree_model

__version__ = "0.1.0"

__all__ = [
    "CliquePath",
    "ContractError",
    "EHIGError",
    "ForbiddenWitness",
    "FormatError",
    "Graph",
    "GuardExceededError",
    "HittingSet",
    "InputError",
    "IntervalHypergraph",
    "NotIntervalGraphError",
    "RecognitionCertificate",
    "StretchedModel",
    "Verdict",
    "build_canonical",
    "build_graph",
    "chordal_subtree_model",
    "cli_main",
    "exact_hit_check",
    "exactly_hittable",
    "format_graph",
    "format_hypergraph",
    "harary_model",
    "min_membership_hitting",
    "parse_graph",
    "parse_hypergraph",
    "recognize",
    "recognize_interval",
    "verify_canonical",
    "verify_certificate",
    "verify_forbidden_witness",
]
