"""
Inseparability of triangle-free defining graphs.

A triangle-free graph is inseparable when it is connected and has no
separating vertex, separating edge, cut pair, or separating vertex
suspension.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Optional, Tuple

import networkx as nx

from src.graph.core import SimplicialGraph, find_triangle
from src.utils.errors import NotTriangleFree

logger = logging.getLogger(__name__)

Separator = Tuple[str, ...]


@dataclass(frozen=True)
class InseparabilityReport:
    """
    Separator witnesses in canonical order; None when a shape is absent.
    """
    connected: bool
    separating_vertex: Optional[Separator] = None
    separating_edge: Optional[Separator] = None
    cut_pair: Optional[Separator] = None
    separating_vertex_suspension: Optional[Separator] = None

    @property
    def inseparable(self) -> bool:
        return self.connected and not any(self.witnesses().values())

    def witnesses(self) -> Dict[str, Optional[Separator]]:
        return {
            'separating_vertex': self.separating_vertex,
            'separating_edge': self.separating_edge,
            'cut_pair': self.cut_pair,
            'separating_vertex_suspension': self.separating_vertex_suspension,
        }

    def to_dict(self) -> Dict[str, object]:
        data = {'connected': self.connected, 'inseparable': self.inseparable}
        for name, witness in self.witnesses().items():
            data[name] = list(witness) if witness else None
        return data


def separates(graph: SimplicialGraph, removed: Iterable[str]) -> bool:
    """True iff deleting the vertex set leaves at least two components."""
    drop = set(removed)
    keep = [v for v in graph.vertices if v not in drop]
    if len(keep) < 2:
        return False
    return nx.number_connected_components(graph.nx.subgraph(keep)) >= 2


def _first(graph: SimplicialGraph, candidates) -> Optional[Separator]:
    for candidate in candidates:
        if separates(graph, candidate):
            return tuple(candidate)
    return None


def _suspensions(graph: SimplicialGraph):
    for a, b in combinations(graph.vertices, 2):
        if graph.has_edge(a, b):
            continue
        for c in sorted(graph.neighbors(a) & graph.neighbors(b)):
            yield tuple(sorted((a, b, c)))


def is_inseparable(graph: SimplicialGraph) -> InseparabilityReport:
    """
    Check the four separator shapes.

    Args:
        graph: Triangle-free graph

    Returns:
        InseparabilityReport with the first witness of each shape

    Raises:
        NotTriangleFree: If graph has a triangle
    """
    triangle = find_triangle(graph)
    if triangle:
        raise NotTriangleFree(triangle)

    connected = len(graph) > 0 and nx.is_connected(graph.nx)
    pairs = list(combinations(graph.vertices, 2))
    report = InseparabilityReport(
        connected=connected,
        separating_vertex=_first(graph, ((v,) for v in graph.vertices)),
        separating_edge=_first(graph, (p for p in pairs if graph.has_edge(*p))),
        cut_pair=_first(graph, (p for p in pairs if not graph.has_edge(*p))),
        separating_vertex_suspension=_first(graph, _suspensions(graph)),
    )
    logger.debug(f"Inseparability: {report.to_dict()}")
    return report
