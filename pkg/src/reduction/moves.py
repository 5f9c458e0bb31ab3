"""
Doubling moves: a K33 subdivision in a double of the graph with fewer bad
edges than the current one.
"""

import logging
from typing import Iterable, Iterator, List, Optional, Set, Tuple

import networkx as nx

from src.config.strategies import RewriteRule
from src.graph.core import SimplicialGraph
from src.graph.doubling import DoublingResult, double
from src.reduction.rewrites import K33View, improve
from src.search.bad_edges import BadEdgeClass, BadEdgeReport
from src.search.embedding import SubdivisionEmbedding, embedding_errors, k33_embedding
from src.search.subdivision import SubdivisionSearch
from src.utils.errors import PatternMismatch
from src.utils.helpers import Deadline, join_paths

logger = logging.getLogger(__name__)

Move = Tuple[RewriteRule, DoublingResult, SubdivisionEmbedding]


def bad_edge_endpoints(embedding: SubdivisionEmbedding, report: BadEdgeReport,
                       essential: Optional[bool] = None) -> List[str]:
    """
    Endpoints of bad edges in canonical order.

    Args:
        essential: Keep only essential (True) or non-essential (False) ones
    """
    vertices = {v for record in report.bad_edges for v in (record.u, record.w)}
    if essential is not None:
        vertices = {v for v in vertices if (v in embedding.essential_vertices) == essential}
    return sorted(vertices)


def _detours(doubled: DoublingResult, embedding: SubdivisionEmbedding, v: str,
             u: str, w: str) -> Iterator[List[str]]:
    """
    u-w paths whose interior lies in the second copy: first one avoiding
    copied vertices next to the embedding, then the plain shortest one.
    """
    graph = doubled.graph.nx
    anchors = (embedding.vertices & doubled.link) - {u, w}
    blocked: Set[str] = {t for t in doubled.primed if anchors & set(graph[t])}

    seen = []
    for allowed in (doubled.primed - blocked, doubled.primed):
        try:
            path = nx.shortest_path(graph.subgraph(allowed | {u, w}), u, w)
        except (nx.NetworkXNoPath, nx.NodeNotFound):
            continue
        if path not in seen:
            seen.append(path)
            yield path


def reroute_through_copy(graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                         report: BadEdgeReport) -> Iterator[Move]:
    """
    For each non-essential bad-edge endpoint v (canonical order): double
    over v and replace v on its branch by a path between v's two branch
    neighbours whose interior lies in the second copy.

    A path whose interior has no neighbour in the embedding besides its
    ends drops every bad edge at v and adds none, so it is tried first.
    """
    for v in bad_edge_endpoints(embedding, report, essential=False):
        name = embedding.owner(v)
        path = embedding.branches[name]
        i = path.index(v)
        u, w = path[i - 1], path[i + 1]

        doubled = double(graph, v)
        found = False
        for detour in _detours(doubled, embedding, v, u, w):
            found = True
            branches = dict(embedding.branches)
            branches[name] = path[:i] + tuple(detour[1:-1]) + path[i + 1:]
            successor = SubdivisionEmbedding(embedding.pattern, dict(embedding.essential_map), branches)
            yield RewriteRule.REROUTE_THROUGH_COPY, doubled, successor
        if not found:
            logger.debug(f"reroute over '{v}': no path through the copy")


def mirror_side(graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                report: BadEdgeReport) -> Iterator[Move]:
    """
    Bad edge p-q between two vertices of one side: double over p. The other
    side keeps its paths to q and r and reaches r' through the copy.
    """
    view = K33View(embedding)
    for record in report.of_class(BadEdgeClass.ESS_ESS_SAME_SIDE):
        for p, q in ((record.u, record.w), (record.w, record.u)):
            r = next(t for t in view.siblings(p) if t != q)
            doubled = double(graph, p)
            r_prime = doubled.prime(r)
            if r_prime == r:
                continue

            paths = {}
            for s in view.other_side(p):
                toward_p = view.path(s, p)[:-1]
                paths[frozenset((s, q))] = view.path(s, q)
                paths[frozenset((s, r))] = view.path(s, r)
                paths[frozenset((s, r_prime))] = join_paths(
                    toward_p,
                    doubled.prime_path(reversed(toward_p)),
                    doubled.prime_path(view.path(s, r)),
                )
            try:
                successor = k33_embedding(view.other_side(p), (q, r, r_prime), paths)
            except PatternMismatch:
                continue
            if not embedding_errors(doubled.graph, successor, check_pattern=False):
                successor, applied = improve(doubled.graph, successor)
                if applied:
                    logger.debug(f"mirror over '{p}' tidied by {[a.value for a in applied]}")
            yield RewriteRule.MIRROR_SIDE, doubled, successor


# ============================================================================
# SEARCH FALLBACKS
# ============================================================================

def _search_doubles(graph: SimplicialGraph, vertices: Iterable[str], report: BadEdgeReport,
                    rule: RewriteRule, budget: Optional[int],
                    deadline: Optional[Deadline]) -> Iterator[Move]:
    for v in vertices:
        doubled = double(graph, v)
        search = SubdivisionSearch(doubled.graph, budget=budget, deadline=deadline)
        found = search.find_k33_below(report.count - 1)
        if found is not None:
            yield rule, doubled, found


def endpoint_double(graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                    report: BadEdgeReport, budget: Optional[int] = None,
                    deadline: Optional[Deadline] = None) -> Iterator[Move]:
    """Search the double over each bad-edge endpoint for a K33 with fewer bad edges."""
    yield from _search_doubles(
        graph, bad_edge_endpoints(embedding, report), report,
        RewriteRule.ENDPOINT_DOUBLE, budget, deadline,
    )


def exhaustive_double(graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                      report: BadEdgeReport, budget: Optional[int] = None,
                      deadline: Optional[Deadline] = None) -> Iterator[Move]:
    """Search the double over every vertex that is not a bad-edge endpoint."""
    endpoints = set(bad_edge_endpoints(embedding, report))
    yield from _search_doubles(
        graph, [v for v in graph.vertices if v not in endpoints], report,
        RewriteRule.EXHAUSTIVE_DOUBLE, budget, deadline,
    )
