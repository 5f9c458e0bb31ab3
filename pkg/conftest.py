"""
Shared fixtures and hypothesis strategies.

Named graphs come from the generators so tests and the CLI see the same
labels: essential vertices a, b, c / x, y, z, branch interiors like ax1.
"""

from itertools import combinations

import pytest
from hypothesis import strategies as st

from src.graph import SimplicialGraph, find_triangle
from src.io import generate, generate_with_embedding
from src.search.patterns import SIDE_ONE, SIDE_TWO, PatternId, get_pattern


# ============================================================================
# NAMED GRAPHS
# ============================================================================

@pytest.fixture
def C4():
    return generate('cycle', n=4)


@pytest.fixture
def C5():
    return generate('cycle', n=5)


@pytest.fixture
def C6():
    return generate('cycle', n=6)


@pytest.fixture
def C9():
    return generate('cycle', n=9)


@pytest.fixture
def K3():
    return SimplicialGraph(['a', 'b', 'c'], [('a', 'b'), ('b', 'c'), ('a', 'c')])


@pytest.fixture
def K33():
    return generate('k33_subdiv', branches=0)


@pytest.fixture
def K33S1():
    return generate('k33_subdiv', branches=1)


@pytest.fixture
def K33S1_embedding():
    return generate_with_embedding('k33_subdiv', branches=1)[1]


@pytest.fixture
def K5S1():
    return generate('k5_subdiv', branches=1)


@pytest.fixture
def PI1():
    return generate('pi', branches=1)


@pytest.fixture
def PI1_embedding():
    return generate_with_embedding('pi', branches=1)[1]


@pytest.fixture
def FIG5R1():
    return generate('fig5_right', branches=1)


@pytest.fixture
def FIG5R1_embedding():
    return generate_with_embedding('fig5_right', branches=1)[1]


@pytest.fixture
def M4():
    return generate('mobius', n=4)


@pytest.fixture
def THETA233():
    return generate('theta', lengths=(2, 2, 3))


@pytest.fixture
def THETA233_embedding():
    return generate_with_embedding('theta', lengths=(2, 2, 3))[1]


@pytest.fixture
def petersen():
    return generate('petersen')


@pytest.fixture
def K33AB():
    """Its only K33 subdivision leaves the chord a-b bad; no single double lowers B."""
    vertices = ['a', 'b', 'c', 'x', 'y', 'z', 'az1', 'bx1', 'by1', 'by2', 'cz1']
    edges = [
        ('a', 'az1'), ('az1', 'z'), ('a', 'b'), ('a', 'x'), ('a', 'y'),
        ('b', 'bx1'), ('bx1', 'x'), ('b', 'by1'), ('by1', 'by2'), ('by2', 'y'), ('b', 'z'),
        ('c', 'cz1'), ('cz1', 'z'), ('c', 'x'), ('c', 'y'),
    ]
    return SimplicialGraph(vertices, edges)


# ============================================================================
# HYPOTHESIS STRATEGIES
# ============================================================================

@st.composite
def simple_graphs(draw, min_vertices: int = 1, max_vertices: int = 8, triangle_free: bool = False):
    """Random simple graphs on v0..v{n-1}; optionally with triangles removed greedily."""
    n = draw(st.integers(min_vertices, max_vertices))
    labels = [f"v{i}" for i in range(n)]
    pairs = list(combinations(labels, 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [pair for pair, keep in zip(pairs, chosen) if keep]
    if triangle_free:
        kept = []
        for edge in edges:
            trial = SimplicialGraph(labels, kept + [edge])
            if find_triangle(trial) is None:
                kept.append(edge)
        edges = kept
    return SimplicialGraph(labels, edges)


def _with_chords(draw, graph: SimplicialGraph, max_chords: int) -> SimplicialGraph:
    candidates = [
        (u, w) for u, w in combinations(graph.vertices, 2) if not graph.has_edge(u, w)
    ]
    picks = draw(st.lists(st.sampled_from(candidates), max_size=max_chords, unique=True)) if candidates else []
    edges = list(graph.edges)
    for chord in picks:
        trial = SimplicialGraph(graph.vertices, edges + [chord])
        if find_triangle(trial) is None:
            edges.append(chord)
    return SimplicialGraph(graph.vertices, edges)


@st.composite
def subdivided_k33(draw, max_interior: int = 2, max_chords: int = 3):
    """
    Branch-subdivided K33 plus random chords that keep the graph triangle-free.
    """
    counts = {s + t: draw(st.integers(0, max_interior)) for s in SIDE_ONE for t in SIDE_TWO}
    return _with_chords(draw, generate('k33_subdiv', branches=counts), max_chords)


@st.composite
def subdivided_k5(draw, max_interior: int = 2, max_chords: int = 3):
    """Subdivided K5, every branch at least once so it starts triangle-free, plus chords."""
    counts = {name: draw(st.integers(1, max_interior)) for name in get_pattern(PatternId.K5).branch_names}
    return _with_chords(draw, generate('k5_subdiv', branches=counts), max_chords)


def subdivided_kuratowski(max_interior: int = 2, max_chords: int = 3):
    return st.one_of(
        subdivided_k33(max_interior=max_interior, max_chords=max_chords),
        subdivided_k5(max_interior=max_interior, max_chords=max_chords),
    )
