"""Acceptance runs: exhaustive small-graph sweeps and large differential runs"""

import logging
import random

import networkx as nx
import pytest

from ehig_kit.canonical import build_canonical, verify_canonical
from ehig_kit.ehig import (
    build_partition_cover,
    construct_backbone,
    cover_size_profile,
    extract_hitting_points,
    realizing_points,
    recognize,
    triple_intersection_check,
    verify_certificate,
)
from ehig_kit.generators import (
    model_graph,
    random_chordal_graph,
    random_graph,
    random_interval_model,
    random_proper_interval_model,
    run_decision_oracle,
    run_mmsc_oracle,
)
from ehig_kit.graphs import (
    find_claw,
    from_networkx,
    has_interval_model_bruteforce,
    intersection_graph,
    is_proper_interval,
    recognize_interval,
    reduce_twins,
    require_clique_path,
    twin_reduced_clique_path,
    vertex_ranges,
)
from ehig_kit.hyperkit import brute_force_ehs, exact_hit_check, proper_greedy_ehs
from ehig_kit.models import (
    chordal_subtree_model,
    harary_model,
    verify_set_system_model,
    verify_subtree_model,
)


def atlas_graphs():
    """Every graph on 1 to 7 vertices, up to isomorphism"""
    return [
        from_networkx(nx.relabel_nodes(sample, lambda v: f"v{v}"))
        for sample in nx.graph_atlas_g()
        if sample.number_of_nodes() > 0
    ]


def atlas_interval_graphs():
    """Every interval graph on 1 to 7 vertices, up to isomorphism"""
    return [graph for graph in atlas_graphs() if recognize_interval(graph).is_interval]


@pytest.fixture(scope="module")
def small_graphs():
    return atlas_graphs()


@pytest.fixture(scope="module")
def small_interval_graphs():
    return atlas_interval_graphs()


@pytest.mark.acceptance
@pytest.mark.slow
class TestExhaustiveSweep:
    """All interval graphs with at most seven vertices"""

    def test_verdicts_match_brute_force(self, small_interval_graphs):
        """recognize() agrees with exact hitting on the canonical model"""
        for graph in small_interval_graphs:
            certificate = recognize(graph)
            exact = brute_force_ehs(certificate.model.hypergraph)
            assert certificate.is_ehig == (exact is not None), graph.edges()
            assert verify_certificate(certificate), graph.edges()

    def test_every_negative_has_a_witness(self, small_interval_graphs):
        """Graphs that are not exactly hittable carry a verified witness"""
        for graph in small_interval_graphs:
            certificate = recognize(graph)
            if not certificate.is_ehig:
                assert certificate.witness is not None, graph.edges()

    def test_large_cover_means_not_ehig(self, small_interval_graphs):
        """A backbone vertex needing four cliques rules out exact hitting"""
        for graph in small_interval_graphs:
            reduced, _ = reduce_twins(graph)
            clique_path = require_clique_path(reduced)
            profile = cover_size_profile(construct_backbone(clique_path), clique_path)
            if profile.has_large:
                assert not recognize(graph).is_ehig, graph.edges()

    def test_canonical_models_verify(self, small_interval_graphs):
        """Twin-reduced graphs always get a verified canonical model"""
        for graph in small_interval_graphs:
            reduced, _ = reduce_twins(graph)
            model = build_canonical(require_clique_path(reduced))
            assert verify_canonical(reduced, model), graph.edges()


@pytest.mark.acceptance
@pytest.mark.slow
class TestIntervalSweep:
    """Interval recognition, twins and claws on every graph up to seven vertices"""

    def test_recognition_matches_clique_orderings(self, small_graphs):
        """A clique path is found iff some clique ordering is consecutive"""
        for graph in small_graphs:
            assert recognize_interval(graph).is_interval == (
                has_interval_model_bruteforce(graph)
            ), graph.edges()

    def test_ranges_rebuild_the_graph(self, small_interval_graphs):
        """Clique ranges intersect exactly like the graph"""
        for graph in small_interval_graphs:
            ranges = vertex_ranges(require_clique_path(graph))
            rebuilt = intersection_graph(
                (iv.id, range(iv.left, iv.right + 1)) for iv in ranges.intervals
            )
            assert rebuilt == graph, graph.edges()

    def test_twin_reduction(self, small_interval_graphs):
        """Merged vertices map to kept twins; a second pass merges nothing"""
        for graph in small_interval_graphs:
            reduced, merged = reduce_twins(graph)
            assert reduce_twins(reduced) == (reduced, {}), graph.edges()
            assert set(reduced.vertices) == set(graph.vertices) - set(merged)
            for twin, kept in merged.items():
                assert kept < twin
                assert kept in reduced.vertices
                assert graph.closed_neighborhood(twin) == (
                    graph.closed_neighborhood(kept)
                ), graph.edges()

    def test_claws_are_induced(self, small_graphs):
        """A reported claw induces exactly its three spokes"""
        for graph in small_graphs:
            claw = find_claw(graph)
            if claw is None:
                continue
            vertices = (claw.center, *claw.leaves)
            assert len(set(vertices)) == 4
            induced = graph.induced(vertices)
            assert induced.edge_count == 3, graph.edges()
            assert induced.degree(claw.center) == 3, graph.edges()


@pytest.mark.acceptance
@pytest.mark.slow
class TestSeededCanonicalRuns:
    """Canonical models of random interval graphs"""

    def test_canonical_models_verify(self):
        """Every twin-reduced random interval graph gets a verified model"""
        rng = random.Random(13)
        for _ in range(500):
            graph = model_graph(random_interval_model(rng.randint(1, 9), rng))
            reduced, _, clique_path = twin_reduced_clique_path(graph)
            model = build_canonical(clique_path)
            assert verify_canonical(reduced, model), graph.edges()


@pytest.mark.acceptance
@pytest.mark.slow
class TestDifferentialRuns:
    """Thousand-case oracle runs"""

    def test_decision_oracle(self):
        """No disagreement and no unverifiable certificate"""
        run = run_decision_oracle(1000, max_size=9, seed=0)
        assert run.disagreements == []
        assert run.unverified == 0
        assert run.skipped == 0

    def test_mmsc_oracle(self):
        """The polynomial k equals the exhaustive minimax"""
        run = run_mmsc_oracle(1000, max_size=15, seed=0)
        assert run.passed
        assert run.agreements == 1000


@pytest.mark.acceptance
class TestFamilies:
    """Proper interval graphs and the two general models"""

    @pytest.mark.slow
    def test_proper_interval_graphs_are_ehig(self):
        """Staircase models are hit exactly by the greedy and recognized"""
        rng = random.Random(11)
        for _ in range(500):
            model = random_proper_interval_model(rng.randint(1, 12), rng)
            points = proper_greedy_ehs(model)
            assert exact_hit_check(model, points).is_exact
            assert recognize(model_graph(model)).is_ehig

    def test_hierarchy_is_strict(self, claw_graph, star_graph):
        """K_{1,3} is exactly hittable but not proper; K_{1,4} is interval only"""
        assert recognize(claw_graph).is_ehig
        assert not is_proper_interval(claw_graph).is_proper
        assert recognize_interval(star_graph).is_interval
        assert not recognize(star_graph).is_ehig

    @pytest.mark.slow
    def test_set_system_models(self):
        """Arbitrary graphs get verified set-system models"""
        rng = random.Random(5)
        for _ in range(500):
            graph = random_graph(rng.randint(1, 10), rng.random(), rng)
            assert verify_set_system_model(graph, harary_model(graph))

    @pytest.mark.slow
    def test_subtree_models(self):
        """Connected chordal graphs get verified subtree models"""
        rng = random.Random(9)
        for _ in range(500):
            graph = random_chordal_graph(rng.randint(1, 10), rng)
            assert verify_subtree_model(graph, chordal_subtree_model(graph))


@pytest.mark.acceptance
class TestBlockConstructionGaps:
    """Cases where the backbone block construction is not enough"""

    def test_six_vertex_example(self, fig2_graph, fig2_path, fig2_model):
        """Block {b} has no realizing point, yet the graph is exactly hittable"""
        backbone = construct_backbone(fig2_path)
        assert triple_intersection_check(backbone, fig2_path)
        blocks = build_partition_cover(backbone, fig2_path)
        assert frozenset("b") in blocks
        assert all(
            fig2_model.vertices_at(point) != {"b"}
            for point in range(1, fig2_model.n + 1)
        )
        assert realizing_points(fig2_model, frozenset("b")) == []
        assert extract_hitting_points(fig2_model, blocks) is None
        certificate = recognize(fig2_graph)
        assert certificate.is_ehig
        assert verify_certificate(certificate)

    def test_two_threes_in_one_component(self, double_caterpillar):
        """Two cover-size-3 backbone vertices, still exactly hittable"""
        reduced, _ = reduce_twins(double_caterpillar)
        clique_path = require_clique_path(reduced)
        backbone = construct_backbone(clique_path)
        assert cover_size_profile(backbone, clique_path).threes == 2
        certificate = recognize(double_caterpillar)
        assert certificate.is_ehig
        assert verify_certificate(certificate)

    def test_shared_pair_breaks_the_triple_check(self, caplog, shared_pair_graph):
        """Three consecutive cover cliques share two vertices; still exactly hittable"""
        clique_path = require_clique_path(shared_pair_graph)
        backbone = construct_backbone(clique_path)
        assert backbone.vertices == ("v5", "v2")
        assert backbone.cover == (1, 3, 4, 5)
        assert cover_size_profile(backbone, clique_path).sizes == (2, 3)
        q3, q4, q5 = (clique_path.clique(index) for index in (3, 4, 5))
        assert q3 & q4 & q5 == {"v2", "v4"}
        assert not triple_intersection_check(backbone, clique_path)
        with caplog.at_level(logging.WARNING, logger="ehig_kit"):
            certificate = recognize(shared_pair_graph)
        assert certificate.is_ehig
        assert verify_certificate(certificate)
        assert "sharing more than one vertex" in caplog.text

    @pytest.mark.slow
    def test_triple_check_failures_still_recognized(self, small_interval_graphs):
        """Graphs failing the triple check still get correct verified certificates"""
        for graph in small_interval_graphs:
            reduced, _ = reduce_twins(graph)
            clique_path = require_clique_path(reduced)
            backbone = construct_backbone(clique_path)
            if triple_intersection_check(backbone, clique_path):
                continue
            certificate = recognize(graph)
            exact = brute_force_ehs(certificate.model.hypergraph)
            assert certificate.is_ehig == (exact is not None), graph.edges()
            assert verify_certificate(certificate), graph.edges()
