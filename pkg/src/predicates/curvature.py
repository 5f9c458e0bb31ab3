"""
Word-hyperbolicity of a RACG with triangle-free defining graph: the group
is hyperbolic iff the graph has no induced square.
"""

import logging
from typing import Optional, Tuple

from src.graph.core import SimplicialGraph, enumerate_induced_cycles, find_triangle
from src.utils.errors import NotTriangleFree

logger = logging.getLogger(__name__)


def induced_squares(graph: SimplicialGraph):
    """Induced 4-cycles in canonical form."""
    return [c for c in enumerate_induced_cycles(graph, 4) if len(c) == 4]


def find_induced_square(graph: SimplicialGraph) -> Optional[Tuple[str, ...]]:
    squares = induced_squares(graph)
    return squares[0] if squares else None


def is_hyperbolic_racg(graph: SimplicialGraph) -> bool:
    """
    Raises:
        NotTriangleFree: If graph has a triangle
    """
    triangle = find_triangle(graph)
    if triangle:
        raise NotTriangleFree(triangle)
    square = find_induced_square(graph)
    if square:
        logger.debug(f"Induced square {square}: not hyperbolic")
    return square is None
