"""Embedded YAML fixtures and default settings"""

from pathlib import Path
from typing import Any

import yaml

from ..core.errors import InputError
from ..graphs.graph import Graph, build_graph
from ..hyperkit.hypergraph import IntervalHypergraph

__all__ = ["FixtureManager"]


class FixtureManager:
    """Loads the fixture graphs and hypergraphs shipped with the package"""

    def __init__(self, fixture_dir: str | None = None):
        self.files_dir = (
            Path(fixture_dir) if fixture_dir else Path(__file__).parent / "files"
        )

    def get_fixture(self, name: str) -> dict[str, Any]:
        """Raw fixture document"""
        path = self.files_dir / "fixtures" / f"{name}.yaml"
        if not path.exists():
            raise InputError(
                f"Unknown fixture: {name} (available: {', '.join(self.list_fixtures())})"
            )
        with open(path) as f:
            return yaml.safe_load(f)

    def load_graph(self, name: str) -> Graph:
        document = self.get_fixture(name)
        if document.get("kind") != "graph":
            raise InputError(f"Fixture {name} is not a graph")
        return build_graph(
            [(str(u), str(v)) for u, v in document.get("edges", [])],
            labels=[str(v) for v in document.get("vertices", [])],
        )

    def load_hypergraph(self, name: str) -> IntervalHypergraph:
        document = self.get_fixture(name)
        if document.get("kind") != "hypergraph":
            raise InputError(f"Fixture {name} is not a hypergraph")
        return IntervalHypergraph.create(
            int(document["n"]),
            [(str(i), int(l), int(r)) for i, l, r in document.get("intervals", [])],
        )

    def list_fixtures(self, kind: str | None = None) -> list[str]:
        """Fixture names, optionally restricted to ``graph`` or ``hypergraph``"""
        names = []
        for path in sorted((self.files_dir / "fixtures").glob("*.yaml")):
            if kind is None:
                names.append(path.stem)
                continue
            with open(path) as f:
                if (yaml.safe_load(f) or {}).get("kind") == kind:
                    names.append(path.stem)
        return names

    def default_settings(self) -> dict[str, Any]:
        with open(self.files_dir / "settings" / "default.yaml") as f:
            return yaml.safe_load(f) or {}
