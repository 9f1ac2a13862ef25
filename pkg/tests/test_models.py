"""Tests for the set-system and subtree models"""

from dataclasses import replace
from types import MappingProxyType

import networkx as nx
import pytest
from hypothesis import given, settings

from ehig_kit.core.errors import ContractError
from ehig_kit.graphs import build_graph
from ehig_kit.models import (
    chordal_subtree_model,
    clique_tree,
    dump_set_system,
    dump_subtree_model,
    harary_model,
    verify_set_system_model,
    verify_subtree_model,
)
from ehig_kit.models.set_system import edge_element, vertex_element
from tests.strategies import simple_graphs


@pytest.mark.models
class TestSetSystemModel:
    """Vertex elements plus one element per edge"""

    def test_fig2_sets(self, fig2_graph):
        """Each set holds its vertex and its incident edges"""
        model = harary_model(fig2_graph)
        assert {str(e) for e in model.sets["a"]} == {"a", "a-d", "a-u"}
        assert model.sets["a"] == {
            vertex_element("a"),
            edge_element("d", "a"),
            edge_element("a", "u"),
        }
        assert model.hitting == tuple(vertex_element(v) for v in fig2_graph.vertices)
        assert len(model.universe) == fig2_graph.n + fig2_graph.edge_count
        assert verify_set_system_model(fig2_graph, model)

    def test_non_interval_graph(self, cycle4_graph):
        """Any graph has a model, C4 included"""
        assert verify_set_system_model(cycle4_graph, harary_model(cycle4_graph))

    def test_hyphenated_labels(self):
        """Vertex names that look like edge names stay distinct elements"""
        graph = build_graph([("a", "b-c"), ("a-b", "c")], labels=["a-b-c"])
        model = harary_model(graph)
        assert verify_set_system_model(graph, model)
        assert edge_element("a", "b-c") != edge_element("a-b", "c")
        assert vertex_element("a-b") not in model.sets["a"]
        assert len(model.universe) == 7

    def test_edge_element_is_unordered(self):
        """Both endpoint orders name the same edge"""
        assert edge_element("b", "a") == edge_element("a", "b")
        assert edge_element("a", "b").is_edge
        assert not vertex_element("a").is_edge

    def test_dump(self, path3_graph):
        """One set line per vertex and the hitting line"""
        assert dump_set_system(harary_model(path3_graph)) == (
            "set a : a a-b\n"
            "set b : a-b b b-c\n"
            "set c : b-c c\n"
            "hitting : a b c\n"
        )

    def test_verify_rejects_double_hit(self, path3_graph):
        """A hitting set meeting some set twice fails"""
        model = harary_model(path3_graph)
        broken = replace(
            model,
            hitting=(vertex_element("a"), edge_element("a", "b"), vertex_element("c")),
        )
        assert not verify_set_system_model(path3_graph, broken)

    @settings(max_examples=40, deadline=None)
    @given(simple_graphs(max_vertices=7))
    def test_random_graphs(self, graph):
        """The model always verifies"""
        assert verify_set_system_model(graph, harary_model(graph))


@pytest.mark.models
class TestSubtreeModel:
    """Clique trees with pendant leaves"""

    def test_clique_tree(self, fig2_graph):
        """Four cliques joined by three edges"""
        tree = clique_tree(fig2_graph)
        assert len(tree.cliques) == 4
        assert len(tree.edges) == 3
        assert nx.is_tree(tree.to_networkx())

    def test_clique_tree_refusals(self, cycle4_graph):
        """Disconnected or non-chordal graphs have no clique tree"""
        assert clique_tree(build_graph([("a", "b"), ("c", "d")])) is None
        assert clique_tree(cycle4_graph) is None

    def test_net(self, net_graph):
        """The chordal non-interval net gets a verified model"""
        model = chordal_subtree_model(net_graph)
        assert verify_subtree_model(net_graph, model)
        assert len(model.nodes) == 4 + net_graph.n
        assert model.leaves == tuple(f"L_{v}" for v in net_graph.vertices)
        assert all(f"L_{v}" in model.subtrees[v] for v in net_graph.vertices)

    def test_refusals(self, cycle4_graph):
        """Non-chordal and disconnected inputs are contract errors"""
        with pytest.raises(ContractError, match="chordal"):
            chordal_subtree_model(cycle4_graph)
        with pytest.raises(ContractError, match="connected"):
            chordal_subtree_model(build_graph([("a", "b"), ("c", "d")]))

    def test_dump(self, path3_graph):
        """Nodes, edges, sets and the hitting line"""
        text = dump_subtree_model(chordal_subtree_model(path3_graph))
        assert "edge Q1 Q2\n" in text
        assert "node L_a\n" in text
        assert text.endswith("hitting : L_a L_b L_c\n")

    def test_verify_rejects_disconnected_subtree(self, path3_graph):
        """A subtree split in two pieces fails"""
        model = chordal_subtree_model(path3_graph)
        subtrees = dict(model.subtrees)
        subtrees["a"] = subtrees["a"] | {"L_c"}
        broken = replace(model, subtrees=MappingProxyType(subtrees))
        assert not verify_subtree_model(path3_graph, broken)
