"""
Tests for pattern search, bad-edge classification and planarity.
"""

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import simple_graphs
from src.graph import SimplicialGraph, count_edges_within, find_triangle
from src.io import generate, generate_with_embedding
from src.search import (
    BadEdgeClass,
    PatternId,
    SubdivisionEmbedding,
    SubdivisionSearch,
    check_embedding,
    classify_bad_edges,
    count_bad_edges,
    embedding_errors,
    find_planar_double,
    find_subdivision,
    get_pattern,
    is_planar,
    select_canonical_k33,
)
from src.utils.errors import GraphTooLarge, InvalidEmbedding

IDENTITY = {p: p for p in 'abcxyz'}


def as_k33(embedding: SubdivisionEmbedding) -> SubdivisionEmbedding:
    """The same subdivision read as a plain K33."""
    return SubdivisionEmbedding(PatternId.K33, dict(embedding.essential_map), dict(embedding.branches))


# ============================================================================
# BRUTE-FORCE ORACLES
# ============================================================================

def _routes(graph: nx.Graph, hubs, pairs):
    """
    Internally disjoint paths joining each hub pair through non-hub vertices.
    Adjacent pairs always use their edge.
    """
    spare = set(graph) - set(hubs)
    direct = [list(p) for p in pairs if graph.has_edge(*p)]
    missing = [p for p in pairs if not graph.has_edge(*p)]
    if len(missing) > len(spare):
        return

    def extend(i, used):
        if i == len(missing):
            yield []
            return
        s, t = missing[i]
        for path in nx.all_simple_paths(graph.subgraph((spare - used) | {s, t}), s, t):
            for rest in extend(i + 1, used | set(path[1:-1])):
                yield [path] + rest

    for chosen in extend(0, frozenset()):
        yield direct + chosen


def brute_force_k33(graph: SimplicialGraph):
    """(bad edges, length) of every K33 subdivision that joins adjacent hubs by their edge."""
    g = graph.nx
    for hubs in combinations(graph.vertices, 6):
        for one in combinations(hubs, 3):
            if hubs[0] not in one:
                continue
            pairs = [(s, t) for s in one for t in hubs if t not in one]
            for paths in _routes(g, hubs, pairs):
                length = sum(len(p) - 1 for p in paths)
                used = set().union(*paths)
                yield count_edges_within(graph, used) - length, length


def has_k5_subdivision(graph: SimplicialGraph) -> bool:
    g = graph.nx
    return any(
        next(_routes(g, hubs, list(combinations(hubs, 2))), None) is not None
        for hubs in combinations(graph.vertices, 5)
    )


def _skeleton(pattern) -> nx.Graph:
    spec = get_pattern(pattern)
    skeleton = nx.Graph()
    for branch in spec.branches:
        kind = 'any'
        if branch.name in spec.forced_edges:
            kind = 'edge'
        elif branch.name in spec.forced_subdivided:
            kind = 'subdivided'
        skeleton.add_edge(branch.start, branch.end, kind=kind)
    for u, w in spec.extra_edges:
        skeleton.add_edge(u, w, kind='edge')
    return skeleton


def _smoothed(subgraph: nx.Graph):
    """Suppress degree-two vertices; None when that would double an edge."""
    g = nx.Graph(subgraph)
    nx.set_edge_attributes(g, False, 'subdivided')
    for v in [v for v in g if g.degree(v) == 2]:
        u, w = g[v]
        if g.has_edge(u, w):
            return None
        g.remove_node(v)
        g.add_edge(u, w, subdivided=True)
    return g


def _compatible(mine, theirs) -> bool:
    return theirs['kind'] == 'any' or (theirs['kind'] == 'subdivided') == mine['subdivided']


def brute_force_induced(graph: SimplicialGraph, pattern):
    """Branch lengths of every induced subdivision of pattern, one per vertex set."""
    skeleton = _skeleton(pattern)
    extra = len(get_pattern(pattern).extra_edges)
    surplus = skeleton.number_of_edges() - skeleton.number_of_nodes()
    g = graph.nx
    for size in range(skeleton.number_of_nodes(), len(g) + 1):
        for vertices in combinations(g, size):
            sub = g.subgraph(vertices)
            if sub.number_of_edges() != size + surplus:
                continue
            smoothed = _smoothed(sub)
            if smoothed is not None and nx.is_isomorphic(smoothed, skeleton, edge_match=_compatible):
                yield sub.number_of_edges() - extra


PI_MIN = {'ax': 0, 'az': 0, 'bx': 0, 'bz': 0, 'cx': 0, 'cz': 0, 'ay': 1, 'by': 1, 'cy': 1}


@st.composite
def near_patterns(draw):
    """Smallest Pi or Fig5Right plus a new vertex and chords, kept triangle-free."""
    family, branches = draw(st.sampled_from([('pi', PI_MIN), ('fig5_right', 1)]))
    graph = generate(family, branches=branches)
    vertices = list(graph.vertices) + ['w']
    candidates = [(v, 'w') for v in graph.vertices] + [
        (u, w) for u, w in combinations(graph.vertices, 2) if not graph.has_edge(u, w)
    ]
    edges = list(graph.edges)
    for extra in draw(st.lists(st.sampled_from(candidates), max_size=4, unique=True)):
        trial = SimplicialGraph(vertices, edges + [extra])
        if find_triangle(trial) is None:
            edges.append(extra)
    return SimplicialGraph(vertices, edges)


class TestPatterns:

    def test_fig5_right_branch_constraints(self):
        spec = get_pattern('Fig5Right')
        assert spec.forced_edges == frozenset({'ay', 'cy', 'bx', 'bz'})
        assert spec.forced_subdivided == frozenset({'ax', 'az', 'by', 'cx', 'cz'})
        assert set(spec.extra_edges) == {('x', 'y'), ('y', 'z'), ('a', 'b'), ('b', 'c')}

    def test_unknown_pattern(self):
        with pytest.raises(ValueError):
            get_pattern('K7')


class TestPlanarity:

    def test_cycle_is_planar(self, C6):
        assert is_planar(C6) == (True, None)

    def test_k33_witness_is_identity(self, K33):
        planar, witness = is_planar(K33)
        assert not planar
        assert witness.pattern is PatternId.K33
        assert witness.vertices == frozenset(K33.vertices)
        assert embedding_errors(K33, witness) == []

    def test_petersen_has_k33_witness(self, petersen):
        planar, witness = is_planar(petersen)
        assert not planar
        assert witness.pattern is PatternId.K33
        assert embedding_errors(petersen, witness) == []

    def test_pi_has_a_planar_double(self, PI1):
        assert not is_planar(PI1)[0]
        assert find_planar_double(PI1) is not None

    def test_planar_double_over_y(self, PI1):
        from src.graph import double
        assert is_planar(double(PI1, 'y').graph)[0]


class TestFindSubdivision:

    def test_cycle_has_no_k33(self, C9):
        assert find_subdivision(C9, PatternId.K33) is None

    def test_subdivided_k5_is_its_own_witness(self, K5S1):
        found = find_subdivision(K5S1, PatternId.K5)
        assert found is not None
        assert found.vertices == frozenset(K5S1.vertices)
        assert found.essential_map == {p: p for p in 'abcde'}

    def test_pi_identity(self, PI1):
        found = find_subdivision(PI1, PatternId.FIG5_LEFT)
        assert found is not None
        assert found.essential_map == IDENTITY
        check_embedding(PI1, found)

    def test_fig5_right_found(self, FIG5R1):
        found = find_subdivision(FIG5R1, PatternId.FIG5_RIGHT)
        assert found is not None
        assert embedding_errors(FIG5R1, found, check_pattern=True) == []

    def test_pi_has_no_fig5_right(self, PI1):
        assert find_subdivision(PI1, PatternId.FIG5_RIGHT) is None

    def test_theta(self, THETA233, C6):
        assert find_subdivision(THETA233, PatternId.THETA) is not None
        assert find_subdivision(C6, PatternId.THETA) is None

    def test_budget_is_enforced(self):
        with pytest.raises(GraphTooLarge):
            find_subdivision(generate('cycle', n=31), PatternId.K33)
        with pytest.raises(GraphTooLarge):
            SubdivisionSearch(generate('cycle', n=12), budget=10)


class TestBadEdges:

    def test_subdivided_k33_has_none(self, K33S1, K33S1_embedding):
        report = classify_bad_edges(K33S1, K33S1_embedding)
        assert report.count == 0

    def test_pi_as_k33(self, PI1, PI1_embedding):
        report = classify_bad_edges(PI1, as_k33(PI1_embedding))
        assert report.count == 2
        assert set(report.edges()) == {('x', 'y'), ('y', 'z')}
        assert all(r.edge_class is BadEdgeClass.ESS_ESS_SAME_SIDE for r in report.bad_edges)

    def test_k5_chord_to_disjoint_branch(self, K5S1):
        _, embedding = generate_with_embedding('k5_subdiv', branches=1)
        graph = SimplicialGraph(K5S1.vertices, list(K5S1.edges) + [('a', 'de1')])
        report = classify_bad_edges(graph, embedding)
        assert report.count == 1
        assert report.bad_edges[0].edge_class is BadEdgeClass.ESS_TO_DISJOINT_BRANCH

    def test_invalid_embedding_rejected(self, C6, K33S1_embedding):
        with pytest.raises(InvalidEmbedding):
            classify_bad_edges(C6, K33S1_embedding)


class TestCanonicalK33:

    def test_subdivided_k33(self, K33S1):
        embedding, report = select_canonical_k33(K33S1)
        assert report.count == 0
        assert embedding.vertices == frozenset(K33S1.vertices)

    def test_pi_minimum_is_two(self, PI1):
        embedding, report = select_canonical_k33(PI1)
        assert report.count == 2

    def test_none_for_cycle(self, C9):
        assert select_canonical_k33(C9) is None

    def test_deterministic(self, M4):
        first, _ = select_canonical_k33(M4)
        second, _ = select_canonical_k33(M4)
        assert first == second


@settings(max_examples=60, deadline=None)
@given(simple_graphs(min_vertices=5, max_vertices=8))
def test_kuratowski_oracle(graph):
    has_k33 = next(brute_force_k33(graph), None) is not None
    has_k5 = has_k5_subdivision(graph)
    planar, witness = is_planar(graph)
    assert planar == (not has_k33 and not has_k5)
    assert (find_subdivision(graph, PatternId.K33) is not None) == has_k33
    assert (find_subdivision(graph, PatternId.K5) is not None) == has_k5
    if witness is not None:
        assert embedding_errors(graph, witness) == []


@settings(max_examples=40, deadline=None)
@given(simple_graphs(min_vertices=6, max_vertices=8))
def test_canonical_k33_is_minimal(graph):
    candidates = list(brute_force_k33(graph))
    selected = select_canonical_k33(graph)
    if not candidates:
        assert selected is None
        return
    embedding, report = selected
    assert (report.count, embedding.length) == min(candidates)


@settings(max_examples=30, deadline=None)
@given(near_patterns())
def test_induced_pattern_searches_are_minimal(graph):
    search = SubdivisionSearch(graph)
    for pattern in (PatternId.FIG5_LEFT, PatternId.FIG5_RIGHT):
        lengths = list(brute_force_induced(graph, pattern))
        shortest = search.shortest(pattern)
        assert (search.find(pattern) is None) == (not lengths)
        assert (shortest is None) == (not lengths)
        if shortest is not None:
            assert embedding_errors(graph, shortest) == []
            assert shortest.length == min(lengths)


@settings(max_examples=40, deadline=None)
@given(simple_graphs(min_vertices=6, max_vertices=8))
def test_bad_edge_count_formula(graph):
    selected = select_canonical_k33(graph)
    if selected is None:
        return
    embedding, report = selected
    assert report.count == count_edges_within(graph, embedding.vertices) - len(embedding.edges)
    assert report.count == count_bad_edges(graph, embedding)
