"""Seeded generators for graphs, hypergraphs and fixtures, and the
differential oracle runs built on them"""

from .differential import (
    DECISION,
    MMSC,
    OracleCase,
    OracleRun,
    run_decision_oracle,
    run_mmsc_oracle,
)
from .random_models import (
    GeneratorSpec,
    generate,
    model_graph,
    random_chordal_graph,
    random_graph,
    random_hypergraph,
    random_interval_model,
    random_proper_interval_model,
    vertex_labels,
)

__all__ = [
    "DECISION",
    "MMSC",
    "GeneratorSpec",
    "OracleCase",
    "OracleRun",
    "generate",
    "model_graph",
    "random_chordal_graph",
    "random_graph",
    "random_hypergraph",
    "random_interval_model",
    "random_proper_interval_model",
    "run_decision_oracle",
    "run_mmsc_oracle",
    "vertex_labels",
]
