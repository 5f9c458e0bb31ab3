"""
The doubling construction: two copies of a graph minus a vertex's open
star, glued along the vertex's link. The doubled group is an index two
subgroup of the original.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from src.graph.core import SimplicialGraph, link
from src.utils.errors import InvalidGraph

logger = logging.getLogger(__name__)

PRIME_SEPARATOR = '#'


def primed_label(label: str, generation: int) -> str:
    """Label of the second-copy vertex for a given doubling generation."""
    return f"{label}{PRIME_SEPARATOR}{generation}"


@dataclass(frozen=True)
class DoublingResult:
    """
    Result of doubling a graph over one vertex.

    Attributes:
        graph: The doubled graph
        doubled_vertex: The vertex removed by the construction
        correspondence: New vertex -> original vertex (the folding map)
        primed: Vertices of the second copy (fresh labels)
        link: Link of the doubled vertex, shared by both copies
        generation: Counter used in the primed labels
    """
    graph: SimplicialGraph
    doubled_vertex: str
    correspondence: Dict[str, str]
    primed: FrozenSet[str]
    link: FrozenSet[str]
    generation: int

    def prime(self, label: str) -> str:
        """Second-copy image of an original vertex (link vertices are shared)."""
        if label == self.doubled_vertex:
            raise InvalidGraph(f"'{label}' was removed by doubling")
        if label in self.link:
            return label
        return primed_label(label, self.generation)

    def prime_path(self, path: Iterable[str]) -> Tuple[str, ...]:
        return tuple(self.prime(v) for v in path)

    def fold(self, label: str) -> str:
        return self.correspondence[label]


def _free_generation(graph: SimplicialGraph, copied: Iterable[str]) -> int:
    copied = list(copied)
    generation = 1
    while any(primed_label(s, generation) in graph for s in copied):
        generation += 1
    return generation


def double(graph: SimplicialGraph, v: str, generation: Optional[int] = None) -> DoublingResult:
    """
    Double graph over vertex v.

    Args:
        graph: Input graph
        v: Vertex to double over
        generation: Counter for primed labels; the smallest collision-free
            value is chosen when omitted

    Returns:
        DoublingResult for D_v(graph)

    Raises:
        UnknownVertex: If v is not a vertex
        InvalidGraph: If an explicit generation collides with existing labels
    """
    lk = link(graph, v)
    copied = [s for s in graph.vertices if s != v and s not in lk]

    if generation is None:
        generation = _free_generation(graph, copied)
    else:
        clashes = [s for s in copied if primed_label(s, generation) in graph]
        if clashes:
            raise InvalidGraph(
                f"Doubling generation {generation} collides with existing labels "
                f"{[primed_label(s, generation) for s in clashes]}"
            )

    def second(s: str) -> str:
        return s if s in lk else primed_label(s, generation)

    correspondence = {s: s for s in graph.vertices if s != v}
    correspondence.update({primed_label(s, generation): s for s in copied})

    edges = set()
    for a, b in graph.edges:
        if v in (a, b):
            continue
        edges.add((a, b))
        a2, b2 = second(a), second(b)
        edges.add((a2, b2) if a2 <= b2 else (b2, a2))

    doubled = SimplicialGraph(correspondence.keys(), sorted(edges))

    expected = 2 * (len(graph) - 1) - len(lk)
    assert len(doubled) == expected, f"Doubling produced {len(doubled)} vertices, expected {expected}"

    logger.debug(
        f"Doubled over '{v}' (generation {generation}): "
        f"{len(graph)} -> {len(doubled)} vertices"
    )

    return DoublingResult(
        graph=doubled,
        doubled_vertex=v,
        correspondence=correspondence,
        primed=frozenset(primed_label(s, generation) for s in copied),
        link=frozenset(lk),
        generation=generation,
    )
