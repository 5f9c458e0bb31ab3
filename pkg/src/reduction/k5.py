"""
Turning a K5 subdivision into a K33 subdivision, either in the same graph
or in the double over one essential vertex.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Tuple

from src.config.strategies import RewriteRule
from src.graph.core import SimplicialGraph, find_triangle
from src.graph.doubling import DoublingResult, double
from src.search.bad_edges import BadEdgeClass, classify_bad_edges
from src.search.embedding import SubdivisionEmbedding, embedding_errors, k33_embedding
from src.search.patterns import PatternId
from src.search.subdivision import SubdivisionSearch
from src.utils.errors import InternalInvariantViolation, NoK5, NotTriangleFree, PatternMismatch
from src.utils.helpers import join_paths, segment

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class K5Conversion:
    """
    Result of k5_to_k33.

    Attributes:
        source: The shortest K5 embedding the construction started from
        graph: Graph holding the K33 (the input or its double)
        embedding: K33 embedding valid in graph
        doubling: The double used, or None
        rule: K5_SPLIT or K5_DOUBLE (EXHAUSTIVE_DOUBLE for the fallback)
    """
    source: SubdivisionEmbedding
    graph: SimplicialGraph
    embedding: SubdivisionEmbedding
    doubling: Optional[DoublingResult]
    rule: RewriteRule


def _split_candidates(graph: SimplicialGraph, k5: SubdivisionEmbedding
                      ) -> Iterator[SubdivisionEmbedding]:
    """Edge from essential a to interior f of a branch [d,e] avoiding a."""
    report = classify_bad_edges(graph, k5, validate=False)
    for record in report.of_class(BadEdgeClass.ESS_TO_DISJOINT_BRANCH):
        a_image = record.u if k5.role_of(record.u) else record.w
        f = record.w if a_image == record.u else record.u
        a = k5.role_of(a_image)
        branch = k5.spec.branch(k5.owner(f))
        d, e = branch.start, branch.end
        b, c = [r for r in k5.spec.essential if r not in (a, d, e)]
        de = k5.branch_between(d, e)
        paths = {
            frozenset((k5.image(s), k5.image(t))): k5.branch_between(s, t)
            for s in (a, d, e) for t in (b, c)
        }
        paths[frozenset((a_image, f))] = (a_image, f)
        paths[frozenset((k5.image(d), f))] = segment(de, k5.image(d), f)
        paths[frozenset((k5.image(e), f))] = segment(de, k5.image(e), f)
        yield k33_embedding(
            [k5.image(a), k5.image(d), k5.image(e)],
            [k5.image(b), k5.image(c), f],
            paths,
        )


def _double_candidates(graph: SimplicialGraph, k5: SubdivisionEmbedding
                       ) -> Iterator[Tuple[DoublingResult, SubdivisionEmbedding]]:
    """
    Double over essential a with b, c not adjacent to a. Sides
    {b, d, c'} and {c, e, b'}, the primed paths running through the copy.
    """
    roles = sorted(k5.spec.essential, key=k5.image)
    for a in roles:
        a_image = k5.image(a)
        apart = [r for r in roles if r != a and not graph.has_edge(a_image, k5.image(r))]
        for b, c in combinations(apart, 2):
            d, e = [r for r in roles if r not in (a, b, c)]
            doubled = double(graph, a_image)
            prime, prime_path = doubled.prime, doubled.prime_path

            def toward_a(r):
                # branch from r up to the last vertex before a
                return k5.branch_between(r, a)[:-1]

            bi, ci, di, ei = (k5.image(r) for r in (b, c, d, e))
            paths = {
                frozenset((bi, ci)): k5.branch_between(b, c),
                frozenset((bi, ei)): k5.branch_between(b, e),
                frozenset((di, ci)): k5.branch_between(d, c),
                frozenset((di, ei)): k5.branch_between(d, e),
                frozenset((bi, prime(bi))): join_paths(
                    toward_a(b), prime_path(reversed(toward_a(b)))
                ),
                frozenset((di, prime(bi))): join_paths(
                    toward_a(d), prime_path(reversed(toward_a(d))), prime_path(k5.branch_between(d, b))
                ),
                frozenset((prime(ci), ci)): join_paths(
                    prime_path(toward_a(c)), tuple(reversed(toward_a(c)))
                ),
                frozenset((prime(ci), ei)): join_paths(
                    prime_path(k5.branch_between(c, e)),
                    prime_path(toward_a(e)),
                    tuple(reversed(toward_a(e))),
                ),
                frozenset((prime(ci), prime(bi))): prime_path(k5.branch_between(c, b)),
            }
            try:
                candidate = k33_embedding([bi, di, prime(ci)], [ci, ei, prime(bi)], paths)
            except PatternMismatch:
                continue
            yield doubled, candidate


def k5_to_k33(graph: SimplicialGraph, embedding: Optional[SubdivisionEmbedding] = None,
              budget: Optional[int] = None) -> K5Conversion:
    """
    K33 subdivision in graph or in one of its doubles, from a K5 subdivision.

    The K5 is re-minimised first. An edge from an essential vertex to the
    interior of a branch avoiding it splits the K5 inside graph; otherwise
    the double over a suitable essential vertex holds the K33.

    Args:
        graph: Triangle-free host graph
        embedding: K5 embedding (searched for when omitted)
        budget: Search budget for the re-minimisation

    Returns:
        K5Conversion

    Raises:
        NotTriangleFree: If graph has a triangle
        NoK5: If embedding is invalid or graph has no K5 subdivision
    """
    triangle = find_triangle(graph)
    if triangle:
        raise NotTriangleFree(triangle)

    if embedding is not None:
        if embedding.pattern is not PatternId.K5 or embedding_errors(graph, embedding):
            raise NoK5(f"Not a K5 subdivision of the given graph: {embedding.to_dict()}")

    search = SubdivisionSearch(graph, budget=budget if budget is not None else max(len(graph), 1))
    shortest = search.shortest(PatternId.K5)
    if shortest is None:
        raise NoK5(f"Graph with {len(graph)} vertices has no K5 subdivision")

    for candidate in _split_candidates(graph, shortest):
        if not embedding_errors(graph, candidate, check_pattern=False):
            logger.info("K5 split inside the graph")
            return K5Conversion(shortest, graph, candidate, None, RewriteRule.K5_SPLIT)

    for doubled, candidate in _double_candidates(graph, shortest):
        if not embedding_errors(doubled.graph, candidate, check_pattern=False):
            logger.info(f"K5 converted in the double over '{doubled.doubled_vertex}'")
            return K5Conversion(shortest, doubled.graph, candidate, doubled, RewriteRule.K5_DOUBLE)

    logger.warning("K5 constructions failed; searching the graph and its doubles")
    found = search.find(PatternId.K33)
    if found is not None:
        return K5Conversion(shortest, graph, found, None, RewriteRule.K5_SPLIT)
    essential = sorted(shortest.essential_vertices)
    for v in essential + [v for v in graph.vertices if v not in essential]:
        doubled = double(graph, v)
        found = SubdivisionSearch(doubled.graph, budget=len(doubled.graph)).find(PatternId.K33)
        if found is not None:
            return K5Conversion(shortest, doubled.graph, found, doubled, RewriteRule.EXHAUSTIVE_DOUBLE)

    raise InternalInvariantViolation("No K33 subdivision in the graph or any of its doubles")
