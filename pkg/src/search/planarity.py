"""
Planarity with a Kuratowski witness.
"""

import logging
from typing import Optional, Tuple

import networkx as nx

from src.graph.core import SimplicialGraph
from src.graph.doubling import double
from src.search.embedding import SubdivisionEmbedding
from src.search.patterns import PatternId
from src.search.subdivision import SubdivisionSearch
from src.utils.errors import InternalInvariantViolation

logger = logging.getLogger(__name__)


def kuratowski_witness(graph: SimplicialGraph) -> Optional[SubdivisionEmbedding]:
    """
    K5 or K33 subdivision witnessing non-planarity, or None if planar.

    networkx returns a Kuratowski subgraph; the subdivision search then
    reads off its essential vertices and branches. That subgraph is a bare
    subdivision, so the search is not subject to the size budget.
    """
    planar, counterexample = nx.check_planarity(graph.nx, counterexample=True)
    if planar:
        return None

    kuratowski = SimplicialGraph.from_networkx(counterexample)
    has_k5 = any(kuratowski.degree(v) >= 4 for v in kuratowski.vertices)
    pattern = PatternId.K5 if has_k5 else PatternId.K33

    witness = SubdivisionSearch(kuratowski, budget=len(kuratowski)).find(pattern)
    if witness is None:
        raise InternalInvariantViolation(
            f"Kuratowski subgraph with {len(kuratowski)} vertices has no {pattern.value} subdivision"
        )
    logger.debug(f"Kuratowski witness: {pattern.value} on {len(witness.vertices)} vertices")
    return witness


def is_planar(graph: SimplicialGraph) -> Tuple[bool, Optional[SubdivisionEmbedding]]:
    """
    Planarity test.

    Returns:
        (True, None) for planar graphs, otherwise (False, witness) with a
        K5 or K33 SubdivisionEmbedding valid in graph
    """
    witness = kuratowski_witness(graph)
    return witness is None, witness


def find_planar_double(graph: SimplicialGraph) -> Optional[str]:
    """
    First vertex, in label order, whose double is a planar graph.

    A planar double is the defining graph of an index two special subgroup,
    so a hit means the group has a planar CAT(0) boundary.
    """
    for v in graph.vertices:
        if nx.check_planarity(double(graph, v).graph.nx)[0]:
            logger.info(f"Double over '{v}' is planar")
            return v
    return None
