"""Test configuration and fixtures for the EHIG toolkit"""

import pytest
import yaml

from ehig_kit.canonical.stretched import build_canonical
from ehig_kit.graphs.graph import Graph, build_graph
from ehig_kit.graphs.interval import require_clique_path
from ehig_kit.templates import FixtureManager

FIG2_DUMP = """ihg 11 6
i I_a 1 3
i I_d 2 5
i I_u 3 9
i I_b 5 7
i I_e 7 10
i I_c 9 11
# z 1 3
# z 2 5
# z 3 7
# z 4 9
# map a I_a
# map b I_b
# map c I_c
# map d I_d
# map e I_e
# map u I_u
"""


@pytest.fixture
def fixture_manager():
    return FixtureManager()


@pytest.fixture
def fig2_graph(fixture_manager) -> Graph:
    """Six-vertex graph of the canonical construction"""
    return fixture_manager.load_graph("fig2")


@pytest.fixture
def fig2_path(fig2_graph):
    return require_clique_path(fig2_graph)


@pytest.fixture
def fig2_model(fig2_path):
    return build_canonical(fig2_path)


@pytest.fixture
def star_graph(fixture_manager) -> Graph:
    """K_{1,4}"""
    return fixture_manager.load_graph("fig1i")


@pytest.fixture
def edge_witness_graph(fixture_manager) -> Graph:
    """Edge a-b with five independent neighbours"""
    return fixture_manager.load_graph("fig1ii")


@pytest.fixture
def claw_graph(fixture_manager) -> Graph:
    """K_{1,3}"""
    return fixture_manager.load_graph("fig4-k13")


@pytest.fixture
def path3_graph() -> Graph:
    return build_graph([("a", "b"), ("b", "c")])


@pytest.fixture
def cycle4_graph() -> Graph:
    return build_graph([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


@pytest.fixture
def net_graph() -> Graph:
    """Triangle with a pendant at each corner: chordal, not interval"""
    return build_graph(
        [("x", "y"), ("y", "z"), ("x", "z"), ("x", "x1"), ("y", "y1"), ("z", "z1")]
    )


@pytest.fixture
def double_caterpillar() -> Graph:
    """Spine s1..s4 with pendants at s2 and s3"""
    return build_graph(
        [("s1", "s2"), ("s2", "s3"), ("s3", "s4"), ("p2", "s2"), ("p3", "s3")]
    )


@pytest.fixture
def shared_pair_graph() -> Graph:
    """v2 and v4 lie in three consecutive cover cliques; exactly hittable"""
    return build_graph(
        [
            ("v0", "v1"),
            ("v0", "v5"),
            ("v1", "v2"),
            ("v1", "v5"),
            ("v2", "v3"),
            ("v2", "v4"),
            ("v2", "v5"),
            ("v2", "v6"),
            ("v3", "v4"),
            ("v4", "v5"),
            ("v4", "v6"),
        ]
    )


@pytest.fixture
def write_text(tmp_path):
    """Write ``text`` to ``tmp_path / name`` and return the path as a string"""

    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


@pytest.fixture
def settings_file(tmp_path):
    path = tmp_path / "settings.yaml"
    with open(path, "w") as f:
        yaml.dump({"witness": {"path_cap": 3}, "output": {"format": "json"}}, f)
    return str(path)
