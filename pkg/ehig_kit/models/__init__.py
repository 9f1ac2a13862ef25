"""Exactly hittable intersection models of arbitrary and chordal graphs"""

from .set_system import (
    SetSystemModel,
    dump_set_system,
    harary_model,
    verify_set_system_model,
)
from .subtree import (
    CliqueTree,
    SubtreeModel,
    chordal_subtree_model,
    clique_tree,
    dump_subtree_model,
    verify_subtree_model,
)

__all__ = [
    "CliqueTree",
    "SetSystemModel",
    "SubtreeModel",
    "chordal_subtree_model",
    "clique_tree",
    "dump_set_system",
    "dump_subtree_model",
    "harary_model",
    "verify_set_system_model",
    "verify_subtree_model",
]
