"""Type definitions for the EHIG toolkit"""

from dataclasses import dataclass
from enum import Enum


class Verdict(Enum):
    """Outcome of an exact-hittability recognition"""

    EHIG = "ehig"
    NOT_EHIG = "not-ehig"


class NonIntervalReason(Enum):
    """Why interval recognition refused a graph"""

    NOT_CHORDAL = "not-chordal"
    NO_CONSECUTIVE_ORDER = "no-consecutive-order"


class ProperIntervalFailure(Enum):
    """Why a graph is not a proper interval graph"""

    NOT_INTERVAL = "not-interval"
    CLAW = "claw"


class WitnessStrategy(Enum):
    """How a forbidden-structure witness was obtained"""

    STAR = "star"  # backbone vertex with cover size >= 4
    SEGMENT = "segment"  # backbone segment between two cover-size-3 vertices
    EXHAUSTIVE = "exhaustive"


class GeneratorFamily(Enum):
    """Graph and hypergraph generator families"""

    RANDOM_INTERVAL = "random-interval"
    RANDOM_PROPER_INTERVAL = "random-proper-interval"
    RANDOM_GRAPH = "random-graph"
    RANDOM_CHORDAL = "random-chordal"
    RANDOM_HYPERGRAPH = "random-hypergraph"
    FIXTURE = "paper-fixture"


class ModelKind(Enum):
    """Observation-1 model constructions"""

    HARARY = "harary"
    SUBTREE = "subtree"


class OutputFormat(Enum):
    """Report output formats"""

    TEXT = "text"
    JSON = "json"


@dataclass(frozen=True)
class Violation:
    """One breached invariant, reported by the validators"""

    kind: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind} [{self.subject}]: {self.message}"
