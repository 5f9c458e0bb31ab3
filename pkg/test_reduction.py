"""
Tests for the reduction engine and its certificate checker.
"""

import dataclasses

import pytest
from hypothesis import HealthCheck, given, settings

from conftest import subdivided_kuratowski
from src.graph import SimplicialGraph, double, non_adjacent_pairs, find_triangle
from src.config.strategies import RewriteRule
from src.reduction import moves
from src.reduction import (
    Double,
    ReductionCertificate,
    ReductionEngine,
    ReductionStep,
    Terminal,
    TerminalKind,
    bad_edge_endpoints,
    endpoint_double,
    exhaustive_double,
    k5_to_k33,
    reduce,
    reduce_step,
    verify_certificate,
)
from src.search import (
    BadEdgeReport,
    PatternId,
    classify_bad_edges,
    count_bad_edges,
    embedding_errors,
    select_canonical_k33,
)
from src.reduction.moves import reroute_through_copy
from src.utils.errors import GraphTooLarge, NoK5, NotTriangleFree, PlanarInput, ReductionStalled


def with_edge(graph: SimplicialGraph, edge) -> SimplicialGraph:
    return SimplicialGraph(graph.vertices, list(graph.edges) + [edge])


class TestK5Conversion:

    def test_subdivided_k5_needs_a_double(self, K5S1):
        conversion = k5_to_k33(K5S1)
        assert conversion.doubling is not None
        assert conversion.rule in (RewriteRule.K5_DOUBLE, RewriteRule.EXHAUSTIVE_DOUBLE)
        assert conversion.graph == double(K5S1, conversion.doubling.doubled_vertex).graph
        assert conversion.embedding.pattern is PatternId.K33
        assert embedding_errors(conversion.graph, conversion.embedding, check_pattern=False) == []

    def test_chord_to_disjoint_branch_splits_in_place(self, K5S1):
        graph = with_edge(K5S1, ('a', 'de1'))
        conversion = k5_to_k33(graph)
        assert conversion.doubling is None
        assert conversion.rule is RewriteRule.K5_SPLIT
        assert conversion.graph == graph
        sides = {frozenset(side) for side in conversion.embedding.sides}
        assert sides == {frozenset({'a', 'd', 'e'}), frozenset({'b', 'c', 'de1'})}

    def test_no_k5(self, C9):
        with pytest.raises(NoK5):
            k5_to_k33(C9)

    def test_triangle_rejected(self, K3):
        with pytest.raises(NotTriangleFree):
            k5_to_k33(K3)


class TestReduceStep:

    def test_induced_k33_is_terminal(self, K33S1, K33S1_embedding):
        step = reduce_step(K33S1, K33S1_embedding)
        assert step.action == Terminal(TerminalKind.INDUCED_K33)
        assert step.bad == 0

    def test_pi_is_terminal(self, PI1):
        embedding, report = select_canonical_k33(PI1)
        step = reduce_step(PI1, embedding, report)
        assert step.action == Terminal(TerminalKind.FIG5_LEFT)

    def test_single_same_side_edge_is_not_terminal(self, K33S1, K33S1_embedding):
        graph = with_edge(K33S1, ('x', 'y'))
        step = reduce_step(graph, K33S1_embedding)
        assert step.bad == 1
        assert not isinstance(step.action, Terminal)
        if isinstance(step.action, Double):
            assert count_bad_edges(step.graph_after(), step.action.successor) < step.bad


class TestReduce:

    def test_subdivided_k33(self, K33S1):
        certificate = reduce(K33S1)
        assert certificate.terminal is TerminalKind.INDUCED_K33
        assert certificate.doublings == 0
        assert verify_certificate(certificate).ok

    def test_pi(self, PI1):
        certificate = reduce(PI1)
        assert certificate.terminal is TerminalKind.FIG5_LEFT
        assert certificate.terminal_embedding.pattern is PatternId.FIG5_LEFT
        assert verify_certificate(certificate).ok

    def test_fig5_right(self, FIG5R1):
        certificate = reduce(FIG5R1)
        assert certificate.terminal in (TerminalKind.FIG5_RIGHT, TerminalKind.INDUCED_K33)
        assert verify_certificate(certificate).ok

    def test_subdivided_k5(self, K5S1):
        certificate = reduce(K5S1)
        assert certificate.steps[0].embedding.pattern is PatternId.K5
        assert certificate.doublings <= certificate.initial_bad + 1
        assert verify_certificate(certificate).ok

    def test_mobius_ladder(self, M4):
        assert verify_certificate(reduce(M4)).ok

    def test_deterministic(self, FIG5R1):
        first, second = reduce(FIG5R1), reduce(FIG5R1)
        assert first.doubling_sequence == second.doubling_sequence
        assert first.terminal_embedding == second.terminal_embedding

    def test_planar_input(self, C6):
        with pytest.raises(PlanarInput):
            reduce(C6)

    def test_triangle(self, K3):
        with pytest.raises(NotTriangleFree):
            reduce(K3)

    def test_budget(self, PI1):
        with pytest.raises(GraphTooLarge):
            ReductionEngine(budget=10).reduce(PI1)


class TestCertificateVerifier:

    def test_double_replay_mismatch(self, K5S1):
        certificate = reduce(K5S1)
        index = next(i for i, s in enumerate(certificate.steps) if isinstance(s.action, Double))
        following = certificate.steps[index + 1]
        graph = following.graph_before
        extra = next(
            pair for pair in non_adjacent_pairs(graph)
            if find_triangle(with_edge(graph, pair)) is None
        )
        steps = list(certificate.steps)
        steps[index + 1] = dataclasses.replace(following, graph_before=with_edge(graph, extra))
        corrupted = dataclasses.replace(certificate, steps=steps)

        result = verify_certificate(corrupted)
        assert not result.ok
        assert any("double replay mismatch" in d for d in result.diagnostics)

    def test_chorded_induced_k33_claim(self, K33S1, K33S1_embedding):
        graph = with_edge(K33S1, ('ax1', 'by1'))
        certificate = ReductionCertificate(
            initial_graph=graph,
            steps=[ReductionStep(graph, K33S1_embedding, BadEdgeReport(K33S1_embedding, []),
                                 Terminal(TerminalKind.INDUCED_K33))],
            terminal=TerminalKind.INDUCED_K33,
            terminal_embedding=K33S1_embedding,
        )
        result = verify_certificate(certificate)
        assert not result.ok
        assert any("not induced" in d for d in result.diagnostics)

    def test_empty_certificate(self, K33S1, K33S1_embedding):
        certificate = ReductionCertificate(K33S1, [], TerminalKind.INDUCED_K33, K33S1_embedding)
        result = verify_certificate(certificate)
        assert not result.ok
        assert result.diagnostics == ["certificate has no steps"]

    def test_doubling_sequence_disagreement(self, K5S1):
        certificate = reduce(K5S1)
        corrupted = dataclasses.replace(certificate, doubling_sequence=[])
        result = verify_certificate(corrupted)
        assert not result.ok
        assert any("doubling sequence" in d for d in result.diagnostics)


class TestMoves:

    def test_reroute_prefers_a_clean_detour(self, K33S1, K33S1_embedding):
        graph = with_edge(K33S1, ('ax1', 'by1'))
        report = classify_bad_edges(graph, K33S1_embedding)
        assert bad_edge_endpoints(K33S1_embedding, report, essential=False) == ['ax1', 'by1']

        rule, doubled, successor = next(reroute_through_copy(graph, K33S1_embedding, report))
        assert rule is RewriteRule.REROUTE_THROUGH_COPY
        assert doubled.doubled_vertex == 'ax1'
        assert not successor.vertices & {doubled.prime('b'), doubled.prime('y')}
        assert embedding_errors(doubled.graph, successor, check_pattern=False) == []
        assert count_bad_edges(doubled.graph, successor) == 0

    def test_no_endpoint_double_lowers_a_lone_chord(self, K33AB):
        embedding, report = select_canonical_k33(K33AB)
        assert report.edges() == [('a', 'b')]
        assert list(endpoint_double(K33AB, embedding, report)) == []

    def test_exhaustive_double_skips_endpoints(self, K33AB, monkeypatch):
        embedding, report = select_canonical_k33(K33AB)
        seen = []
        original = moves.double

        def recording(graph, v):
            seen.append(v)
            return original(graph, v)

        monkeypatch.setattr(moves, 'double', recording)
        assert list(exhaustive_double(K33AB, embedding, report)) == []
        assert sorted(seen) == sorted(set(K33AB.vertices) - {'a', 'b'})


class TestStall:

    def test_lone_chord_stalls(self, K33AB):
        with pytest.raises(ReductionStalled) as info:
            reduce(K33AB)
        stalled = info.value
        assert stalled.report.count == 1
        assert stalled.graph == K33AB
        assert stalled.embedding.vertices == frozenset(K33AB.vertices)
        assert stalled.steps == []
        assert "B = 1" in str(stalled)

    def test_stall_without_search_fallbacks(self, K33AB):
        engine = ReductionEngine(config={'endpoint_fallback': False, 'exhaustive_fallback': False})
        with pytest.raises(ReductionStalled):
            engine.reduce(K33AB)

    def test_reduce_step_stalls(self, K33AB):
        embedding, report = select_canonical_k33(K33AB)
        with pytest.raises(ReductionStalled) as info:
            reduce_step(K33AB, embedding, report)
        assert info.value.report is report


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(subdivided_kuratowski(max_interior=2, max_chords=3))
def test_reduction_soundness(graph):
    try:
        certificate = reduce(graph)
    except ReductionStalled as e:
        assert e.report.count > 0
        assert e.embedding.pattern is PatternId.K33
        return
    assert verify_certificate(certificate).ok
    assert certificate.terminal in TerminalKind
    assert certificate.doublings <= certificate.initial_bad + 1
    for step in certificate.steps:
        if isinstance(step.action, Double) and step.embedding.pattern is PatternId.K33:
            doubled = step.graph_after()
            assert count_bad_edges(doubled, step.action.successor) < step.bad
