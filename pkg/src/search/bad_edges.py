"""
Bad edges of a subdivision: graph edges with both endpoints on the image
that are not edges of the image.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

from src.graph.core import SimplicialGraph, count_edges_within
from src.search.embedding import SubdivisionEmbedding, embedding_errors
from src.utils.errors import InvalidEmbedding

logger = logging.getLogger(__name__)


class BadEdgeClass(Enum):
    """Position of a bad edge relative to the branches"""
    SAME_BRANCH = "SameBranch"
    NON_ESS_ADJACENT_BRANCHES = "NonEssAdjacentBranches"
    NON_ESS_DISJOINT_BRANCHES = "NonEssDisjointBranches"
    ESS_TO_INCIDENT_BRANCH = "EssToIncidentBranch"
    ESS_TO_DISJOINT_BRANCH = "EssToDisjointBranch"
    ESS_ESS_SAME_SIDE = "EssEssSameSide"


@dataclass(frozen=True)
class BadEdgeRecord:
    u: str
    w: str
    edge_class: BadEdgeClass

    def to_dict(self) -> Dict[str, str]:
        return {'u': self.u, 'w': self.w, 'class': self.edge_class.value}


@dataclass
class BadEdgeReport:
    """
    Bad edges of one embedding.

    Attributes:
        embedding: The embedding the edges were counted against
        bad_edges: Records in canonical edge order
    """
    embedding: SubdivisionEmbedding
    bad_edges: List[BadEdgeRecord] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.bad_edges)

    def of_class(self, edge_class: BadEdgeClass) -> List[BadEdgeRecord]:
        return [r for r in self.bad_edges if r.edge_class == edge_class]

    def edges(self) -> List[Tuple[str, str]]:
        return [(r.u, r.w) for r in self.bad_edges]

    def to_dict(self) -> Dict[str, object]:
        return {
            'B': self.count,
            'bad_edges': [r.to_dict() for r in self.bad_edges],
        }


def _branches_adjacent(emb: SubdivisionEmbedding, first: str, second: str) -> bool:
    one, two = emb.spec.branch(first), emb.spec.branch(second)
    return bool({one.start, one.end} & {two.start, two.end})


def classify_edge(emb: SubdivisionEmbedding, u: str, w: str) -> BadEdgeClass:
    """
    Class of a bad edge u-w, decided by endpoint types and branch relation.

    Two essential endpoints joined by a branch count as SameBranch, as do
    two interior vertices of one branch.
    """
    u_role, w_role = emb.role_of(u), emb.role_of(w)

    if u_role is not None and w_role is not None:
        if emb.spec.branches_between(u_role, w_role):
            return BadEdgeClass.SAME_BRANCH
        return BadEdgeClass.ESS_ESS_SAME_SIDE

    if u_role is not None or w_role is not None:
        role = u_role if u_role is not None else w_role
        other = w if u_role is not None else u
        branch = emb.spec.branch(emb.owner(other))
        if role in (branch.start, branch.end):
            return BadEdgeClass.ESS_TO_INCIDENT_BRANCH
        return BadEdgeClass.ESS_TO_DISJOINT_BRANCH

    u_branch, w_branch = emb.owner(u), emb.owner(w)
    if u_branch == w_branch:
        return BadEdgeClass.SAME_BRANCH
    if _branches_adjacent(emb, u_branch, w_branch):
        return BadEdgeClass.NON_ESS_ADJACENT_BRANCHES
    return BadEdgeClass.NON_ESS_DISJOINT_BRANCHES


def classify_bad_edges(graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                       validate: bool = True) -> BadEdgeReport:
    """
    Classify every bad edge of an embedding.

    Args:
        graph: Host graph
        embedding: A valid embedding in graph
        validate: Re-validate the embedding first

    Returns:
        BadEdgeReport with B = |E(G[V(emb)])| - |E(emb)|

    Raises:
        InvalidEmbedding: If validation fails
    """
    if validate:
        errors = embedding_errors(graph, embedding, check_pattern=False)
        if errors:
            raise InvalidEmbedding("; ".join(errors))

    on_image = embedding.vertices
    image_edges = embedding.edges
    records = [
        BadEdgeRecord(u, w, classify_edge(embedding, u, w))
        for u, w in graph.edges
        if u in on_image and w in on_image and (u, w) not in image_edges
    ]

    assert len(records) == count_edges_within(graph, on_image) - len(image_edges)
    logger.debug(f"{embedding.pattern.value} embedding has B = {len(records)}")
    return BadEdgeReport(embedding=embedding, bad_edges=records)


def count_bad_edges(graph: SimplicialGraph, embedding: SubdivisionEmbedding) -> int:
    """B without classification."""
    return count_edges_within(graph, embedding.vertices) - len(embedding.edges)
