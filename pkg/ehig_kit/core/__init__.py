"""Core types, errors and settings for the EHIG toolkit"""

from .config import (
    GeneratorSettings,
    OracleSettings,
    RecognitionSettings,
    Settings,
    WitnessSettings,
)
from .errors import (
    ContractError,
    EHIGError,
    FormatError,
    GraphInputError,
    GuardExceededError,
    HypergraphInputError,
    InputError,
    NotIntervalGraphError,
)
from .types import (
    GeneratorFamily,
    ModelKind,
    NonIntervalReason,
    OutputFormat,
    ProperIntervalFailure,
    Verdict,
    Violation,
    WitnessStrategy,
)

__all__ = [
    "ContractError",
    "EHIGError",
    "FormatError",
    "GeneratorFamily",
    "GeneratorSettings",
    "GraphInputError",
    "GuardExceededError",
    "HypergraphInputError",
    "InputError",
    "ModelKind",
    "NonIntervalReason",
    "NotIntervalGraphError",
    "OracleSettings",
    "OutputFormat",
    "ProperIntervalFailure",
    "RecognitionSettings",
    "Settings",
    "Verdict",
    "Violation",
    "WitnessStrategy",
]
