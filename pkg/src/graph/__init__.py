"""Graph package: defining graphs and the doubling construction."""

from src.graph.core import (
    SimplicialGraph,
    link,
    induced_subgraph,
    is_triangle_free,
    find_triangle,
    count_edges_within,
    enumerate_induced_cycles,
    is_induced_cycle,
    non_adjacent_pairs,
)
from src.graph.doubling import DoublingResult, double, primed_label

__all__ = [
    'SimplicialGraph',
    'link',
    'induced_subgraph',
    'is_triangle_free',
    'find_triangle',
    'count_edges_within',
    'enumerate_induced_cycles',
    'is_induced_cycle',
    'non_adjacent_pairs',
    'DoublingResult',
    'double',
    'primed_label',
]
