"""
Tests for defining graphs and the doubling construction.
"""

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import simple_graphs
from src.graph import (
    SimplicialGraph,
    double,
    enumerate_induced_cycles,
    find_triangle,
    induced_subgraph,
    is_induced_cycle,
    is_triangle_free,
    link,
    primed_label,
)
from src.io import parse_graph
from src.utils.errors import DuplicateEdge, InvalidGraph, SelfLoop, UnknownVertex


class TestSimplicialGraph:

    def test_path_from_edge_list(self):
        g = parse_graph("a b\nb c")
        assert g.vertices == ('a', 'b', 'c')
        assert g.edges == (('a', 'b'), ('b', 'c'))
        assert g.neighbors('b') == frozenset({'a', 'c'})

    def test_rejects_self_loop(self):
        with pytest.raises(SelfLoop):
            SimplicialGraph(['a'], [('a', 'a')])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(DuplicateEdge):
            SimplicialGraph(['a', 'b'], [('a', 'b'), ('b', 'a')])

    def test_rejects_unknown_endpoint(self):
        with pytest.raises(UnknownVertex):
            SimplicialGraph(['a'], [('a', 'b')])

    def test_rejects_repeated_vertex(self):
        with pytest.raises(InvalidGraph):
            SimplicialGraph(['a', 'a'], [])

    def test_value_semantics(self):
        one = SimplicialGraph(['b', 'a'], [('b', 'a')])
        two = SimplicialGraph.from_edges([('a', 'b')])
        assert one == two
        assert hash(one) == hash(two)

    def test_link_is_neighbourhood(self, C5):
        assert link(C5, 'v0') == frozenset({'v1', 'v4'})
        with pytest.raises(UnknownVertex):
            link(C5, 'nope')


class TestGraphOperations:

    def test_triangle_detection(self, K3, M4):
        assert find_triangle(K3) == ('a', 'b', 'c')
        assert is_triangle_free(M4)

    def test_induced_subgraph_of_mobius_ladder(self, M4):
        square = induced_subgraph(M4, {'v0', 'v1', 'v4', 'v5'})
        assert set(square.edges) == {('v0', 'v1'), ('v1', 'v5'), ('v4', 'v5'), ('v0', 'v4')}

    def test_induced_squares_of_mobius_ladder(self, M4):
        cycles = enumerate_induced_cycles(M4, 4)
        expected = {
            frozenset({f"v{i}", f"v{i + 1}", f"v{(i + 5) % 8}", f"v{i + 4}"}) for i in range(4)
        }
        assert len(cycles) == 4
        assert {frozenset(c) for c in cycles} == expected
        assert all(is_induced_cycle(M4, c) for c in cycles)

    def test_long_cycle_is_its_only_induced_cycle(self, C9):
        assert enumerate_induced_cycles(C9, 9) == [tuple(f"v{i}" for i in (0, 1, 2, 3, 4, 5, 6, 7, 8))]
        assert enumerate_induced_cycles(C9, 8) == []

    def test_chorded_cycle_is_not_induced(self, C4):
        chorded = SimplicialGraph(C4.vertices, list(C4.edges) + [('v0', 'v2')])
        assert not is_induced_cycle(chorded, ('v0', 'v1', 'v2', 'v3'))

    def test_max_length_below_three_is_rejected(self, C4):
        with pytest.raises(ValueError):
            enumerate_induced_cycles(C4, 2)


class TestDoubling:

    def test_square_doubles_to_square(self, C4):
        result = double(C4, 'v0')
        assert nx.is_isomorphic(result.graph.nx, C4.nx)

    def test_pentagon_doubles_to_hexagon(self, C5, C6):
        result = double(C5, 'v0')
        assert nx.is_isomorphic(result.graph.nx, C6.nx)
        assert result.primed == frozenset({primed_label('v2', 1), primed_label('v3', 1)})

    def test_prime_keeps_link_vertices(self, C5):
        result = double(C5, 'v0')
        assert result.prime('v1') == 'v1'
        assert result.prime('v2') == 'v2#1'
        assert result.prime_path(('v1', 'v2', 'v3')) == ('v1', 'v2#1', 'v3#1')
        with pytest.raises(InvalidGraph):
            result.prime('v0')

    def test_second_doubling_picks_fresh_generation(self, C5):
        once = double(C5, 'v0').graph
        twice = double(once, 'v1')
        assert twice.generation == 2
        assert 'v3#2' in twice.graph

    def test_explicit_generation_collision(self, C5):
        once = double(C5, 'v0').graph
        with pytest.raises(InvalidGraph):
            double(once, 'v1', generation=1)

    def test_unknown_vertex(self, C4):
        with pytest.raises(UnknownVertex):
            double(C4, 'missing')


@settings(max_examples=50, deadline=None)
@given(simple_graphs(min_vertices=2, max_vertices=12, triangle_free=True))
def test_doubling_laws(graph):
    for v in graph.vertices:
        result = double(graph, v)
        doubled = result.graph
        assert len(doubled) == 2 * (len(graph) - 1) - len(link(graph, v))
        for u, w in doubled.edges:
            assert graph.has_edge(result.fold(u), result.fold(w))
        assert is_triangle_free(doubled)
