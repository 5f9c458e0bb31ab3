"""
Finite simple graphs used as RACG defining graphs.

A SimplicialGraph is an immutable value: labels are strings, iteration is
lexicographic, and every operation returns a new graph.
"""

import logging
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from src.utils.errors import DuplicateEdge, InvalidGraph, SelfLoop, UnknownVertex
from src.utils.helpers import canonical_cycle, edge_key

logger = logging.getLogger(__name__)

Edge = Tuple[str, str]


class SimplicialGraph:
    """
    Finite simple graph with stable, sortable vertex labels.

    Example:
        >>> g = SimplicialGraph(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])
        >>> g.neighbors('b')
        frozenset({'a', 'c'})
    """

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[Tuple[str, str]] = ()):
        """
        Build a graph, rejecting anything that is not a simple graph.

        Args:
            vertices: Vertex labels (duplicates are rejected)
            edges: Unordered label pairs; both endpoints must be vertices

        Raises:
            InvalidGraph: Non-string or repeated vertex label
            UnknownVertex: Edge endpoint not in the vertex set
            SelfLoop: Edge joining a vertex to itself
            DuplicateEdge: The same unordered pair given twice
        """
        vertex_list = list(vertices)
        for v in vertex_list:
            if not isinstance(v, str) or not v:
                raise InvalidGraph(f"Vertex labels must be non-empty strings, got {v!r}")
        vertex_set = set(vertex_list)
        if len(vertex_set) != len(vertex_list):
            repeated = sorted({v for v in vertex_list if vertex_list.count(v) > 1})
            raise InvalidGraph(f"Repeated vertex labels: {repeated}")

        adjacency: Dict[str, Set[str]] = {v: set() for v in vertex_set}
        edge_set: Set[Edge] = set()
        for u, w in edges:
            if u not in vertex_set:
                raise UnknownVertex(u, f"edge {u}-{w}")
            if w not in vertex_set:
                raise UnknownVertex(w, f"edge {u}-{w}")
            if u == w:
                raise SelfLoop(f"Self-loop at '{u}'")
            key = edge_key(u, w)
            if key in edge_set:
                raise DuplicateEdge(f"Duplicate edge {key[0]}-{key[1]}")
            edge_set.add(key)
            adjacency[u].add(w)
            adjacency[w].add(u)

        self._vertices: Tuple[str, ...] = tuple(sorted(vertex_set))
        self._edges: Tuple[Edge, ...] = tuple(sorted(edge_set))
        self._adjacency: Dict[str, FrozenSet[str]] = {
            v: frozenset(nbrs) for v, nbrs in adjacency.items()
        }

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[str, str]], vertices: Iterable[str] = ()) -> 'SimplicialGraph':
        """Build a graph whose vertex set is the given vertices plus every edge endpoint."""
        edge_list = list(edges)
        labels = set(vertices)
        for u, w in edge_list:
            labels.update((u, w))
        return cls(sorted(labels), edge_list)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'SimplicialGraph':
        return cls([str(v) for v in graph.nodes], [(str(u), str(w)) for u, w in graph.edges])

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    def neighbors(self, v: str) -> FrozenSet[str]:
        try:
            return self._adjacency[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, w: str) -> bool:
        return w in self._adjacency.get(u, ())

    def require(self, *labels: str):
        """Raise UnknownVertex for the first label not in the graph."""
        for v in labels:
            if v not in self._adjacency:
                raise UnknownVertex(v)

    @cached_property
    def nx(self) -> nx.Graph:
        """networkx view; treat as read-only."""
        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        graph.add_edges_from(self._edges)
        return graph

    def to_dict(self) -> Dict[str, list]:
        return {
            'vertices': list(self._vertices),
            'edges': [list(e) for e in self._edges],
        }

    # ------------------------------------------------------------------
    # Value semantics
    # ------------------------------------------------------------------

    def __contains__(self, v: object) -> bool:
        return v in self._adjacency

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"SimplicialGraph(|V|={len(self._vertices)}, |E|={len(self._edges)})"


# ============================================================================
# GRAPH OPERATIONS
# ============================================================================

def link(graph: SimplicialGraph, v: str) -> FrozenSet[str]:
    """
    Link of a vertex: exactly its neighbours.

    Raises:
        UnknownVertex: If v is not a vertex of graph
    """
    return graph.neighbors(v)


def induced_subgraph(graph: SimplicialGraph, labels: Iterable[str]) -> SimplicialGraph:
    """
    Subgraph on the given vertices with every edge of graph between them.

    Raises:
        UnknownVertex: If a label is not a vertex of graph
    """
    keep = set(labels)
    graph.require(*sorted(keep))
    return SimplicialGraph(
        keep,
        [(u, w) for u, w in graph.edges if u in keep and w in keep],
    )


def find_triangle(graph: SimplicialGraph) -> Optional[Tuple[str, str, str]]:
    """First triangle in canonical order, or None."""
    for u, w in graph.edges:
        common = graph.neighbors(u) & graph.neighbors(w)
        if common:
            return tuple(sorted((u, w, min(common))))
    return None


def is_triangle_free(graph: SimplicialGraph) -> bool:
    return find_triangle(graph) is None


def count_edges_within(graph: SimplicialGraph, labels: Iterable[str]) -> int:
    """Number of graph edges with both endpoints in labels."""
    keep = set(labels)
    return sum(1 for u, w in graph.edges if u in keep and w in keep)


def enumerate_induced_cycles(graph: SimplicialGraph, max_length: int) -> List[Tuple[str, ...]]:
    """
    All induced (chordless) cycles of length <= max_length.

    Each cycle is reported once, rotated to start at its least vertex and
    oriented so its second vertex is less than its last.

    Args:
        graph: Input graph
        max_length: Longest cycle to report (>= 3)

    Returns:
        Sorted list of canonical vertex tuples
    """
    if max_length < 3:
        raise ValueError(f"max_length must be at least 3, got {max_length}")

    found = set()
    for cycle in nx.chordless_cycles(graph.nx, length_bound=max_length):
        if len(cycle) >= 3:
            found.add(canonical_cycle(cycle))

    logger.debug(f"Found {len(found)} induced cycles of length <= {max_length}")
    return sorted(found, key=lambda c: (len(c), c))


def is_induced_cycle(graph: SimplicialGraph, cycle: Tuple[str, ...]) -> bool:
    """
    True iff the vertex sequence is a cycle of graph with no chords.
    """
    n = len(cycle)
    if n < 3 or len(set(cycle)) != n or any(v not in graph for v in cycle):
        return False
    for i in range(n):
        if not graph.has_edge(cycle[i], cycle[(i + 1) % n]):
            return False
    return count_edges_within(graph, cycle) == n


def non_adjacent_pairs(graph: SimplicialGraph):
    """Yield non-adjacent vertex pairs in canonical order."""
    for u, w in combinations(graph.vertices, 2):
        if not graph.has_edge(u, w):
            yield u, w
