"""
Recognising the end states of a reduction: an induced K33 subdivision, or
an induced copy of one of the two K33-plus-side-edges patterns.
"""

import logging
from typing import Optional, Tuple

from src.graph.core import SimplicialGraph
from src.reduction.certificate import TerminalKind
from src.search.bad_edges import BadEdgeClass, BadEdgeReport
from src.search.embedding import SubdivisionEmbedding, embedding_errors
from src.search.patterns import PatternId

logger = logging.getLogger(__name__)


def _side_center(graph: SimplicialGraph, side) -> Optional[str]:
    """Vertex of a side adjacent to the other two, if the side is a 2-path."""
    for s in side:
        others = [t for t in side if t != s]
        if all(graph.has_edge(s, t) for t in others) and not graph.has_edge(*others):
            return s
    return None


def _side_edges(graph: SimplicialGraph, side) -> int:
    return sum(
        1 for i, s in enumerate(side) for t in side[i + 1:] if graph.has_edge(s, t)
    )


def _relabel_checked(graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                     roles: dict, pattern: PatternId) -> Optional[SubdivisionEmbedding]:
    candidate = embedding.relabel(roles, pattern=pattern)
    if embedding_errors(graph, candidate, check_pattern=True):
        return None
    return candidate


def match_terminal(graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                   report: BadEdgeReport) -> Optional[Tuple[TerminalKind, SubdivisionEmbedding]]:
    """
    Terminal state reached by a K33 embedding, if any.

    Returns:
        (kind, embedding) where embedding is re-read in the terminal's own
        pattern, or None
    """
    if embedding.pattern is not PatternId.K33:
        return None
    if report.count == 0:
        return TerminalKind.INDUCED_K33, embedding
    if any(r.edge_class is not BadEdgeClass.ESS_ESS_SAME_SIDE for r in report.bad_edges):
        return None

    role = embedding.role_of
    one, two = embedding.sides
    centers = (_side_center(graph, one), _side_center(graph, two))
    counts = (_side_edges(graph, one), _side_edges(graph, two))

    # one side a 2-path, the other clean
    if report.count == 2:
        for path_side, clean_side, center, clean_count in (
            (one, two, centers[0], counts[1]),
            (two, one, centers[1], counts[0]),
        ):
            if center is None or clean_count:
                continue
            ends = sorted(t for t in path_side if t != center)
            roles = {
                'a': role(clean_side[0]), 'b': role(clean_side[1]), 'c': role(clean_side[2]),
                'x': role(ends[0]), 'y': role(center), 'z': role(ends[1]),
            }
            matched = _relabel_checked(graph, embedding, roles, PatternId.FIG5_LEFT)
            if matched is not None:
                logger.info("Terminal pattern Fig5Left")
                return TerminalKind.FIG5_LEFT, matched

    # both sides 2-paths
    if report.count == 4 and None not in centers:
        ends_one = sorted(t for t in one if t != centers[0])
        ends_two = sorted(t for t in two if t != centers[1])
        roles = {
            'a': role(ends_one[0]), 'b': role(centers[0]), 'c': role(ends_one[1]),
            'x': role(ends_two[0]), 'y': role(centers[1]), 'z': role(ends_two[1]),
        }
        matched = _relabel_checked(graph, embedding, roles, PatternId.FIG5_RIGHT)
        if matched is not None:
            logger.info("Terminal pattern Fig5Right")
            return TerminalKind.FIG5_RIGHT, matched

    return None
