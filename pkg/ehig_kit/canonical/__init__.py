"""Canonical stretched interval representation"""

from .stretched import Gadget, StretchedModel, build_canonical, dump_model, interval_id
from .verification import canonical_violations, verify_canonical

__all__ = [
    "Gadget",
    "StretchedModel",
    "build_canonical",
    "canonical_violations",
    "dump_model",
    "interval_id",
    "verify_canonical",
]
