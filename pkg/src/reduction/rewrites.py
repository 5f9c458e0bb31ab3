"""
Shortening rewrites: K33 subdivisions in the same graph with fewer bad
edges or fewer edges, read off from a bad edge of the current one.

Every candidate is re-validated and its bad edges re-counted; a rewrite is
only returned when (B, length) strictly decreases.
"""

import logging
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Tuple

from src.config.strategies import RewriteRule
from src.graph.core import SimplicialGraph
from src.search.bad_edges import BadEdgeClass, BadEdgeReport, classify_bad_edges, count_bad_edges
from src.search.embedding import (
    SubdivisionEmbedding,
    embedding_errors,
    k33_embedding,
    k33_paths,
)
from src.search.patterns import PatternId
from src.utils.errors import PatternMismatch
from src.utils.helpers import segment

logger = logging.getLogger(__name__)

Paths = Dict[FrozenSet[str], Tuple[str, ...]]


class K33View:
    """Vertex-level view of a K33 embedding: two sides and nine paths."""

    def __init__(self, embedding: SubdivisionEmbedding):
        self.embedding = embedding
        one, two = embedding.sides
        self.sides = (tuple(one), tuple(two))
        self.paths: Paths = k33_paths(embedding)

    def side_of(self, v: str) -> Tuple[str, ...]:
        return self.sides[0] if v in self.sides[0] else self.sides[1]

    def other_side(self, v: str) -> Tuple[str, ...]:
        return self.sides[1] if v in self.sides[0] else self.sides[0]

    def siblings(self, v: str) -> Tuple[str, ...]:
        return tuple(s for s in self.side_of(v) if s != v)

    def path(self, s: str, t: str) -> Tuple[str, ...]:
        path = self.paths[frozenset((s, t))]
        return path if path[0] == s else tuple(reversed(path))

    def ends(self, v: str) -> Tuple[str, str]:
        """Essential ends of the branch holding interior vertex v."""
        for pair, path in self.paths.items():
            if v in path[1:-1]:
                return path[0], path[-1]
        raise KeyError(v)

    def without(self, *vertices: str) -> Paths:
        """Paths whose endpoints avoid every given vertex."""
        drop = set(vertices)
        return {k: p for k, p in self.paths.items() if not k & drop}


# ============================================================================
# CANDIDATE GENERATORS
# ============================================================================

def _branch_chord(graph: SimplicialGraph, view: K33View, report: BadEdgeReport):
    """Shortcut a branch through a chord joining two of its vertices."""
    for record in report.of_class(BadEdgeClass.SAME_BRANCH):
        for key, path in view.paths.items():
            if record.u in path and record.w in path:
                i, j = sorted((path.index(record.u), path.index(record.w)))
                paths = dict(view.paths)
                paths[key] = path[:i + 1] + path[j:]
                yield view.sides[0], view.sides[1], paths
                break


def _adjacent_branch_chord(graph: SimplicialGraph, view: K33View, report: BadEdgeReport):
    """
    Chord v-w between interiors of branches [s,p] and [s,q]: when the s-w
    segment is subdivided, v takes over the role of s.
    """
    for record in report.of_class(BadEdgeClass.NON_ESS_ADJACENT_BRANCHES):
        for v, w in ((record.u, record.w), (record.w, record.u)):
            v_ends, w_ends = set(view.ends(v)), set(view.ends(w))
            shared = v_ends & w_ends
            if len(shared) != 1:
                continue
            s = shared.pop()
            p = (v_ends - {s}).pop()
            q = (w_ends - {s}).pop()
            if len(segment(view.path(s, q), s, w)) < 3:
                continue
            r = next(t for t in view.other_side(s) if t not in (p, q))
            first, second = view.path(s, p), view.path(s, q)

            paths = view.without(s)
            paths[frozenset((v, p))] = segment(first, v, p)
            paths[frozenset((v, q))] = (v,) + segment(second, w, q)
            paths[frozenset((v, r))] = segment(first, v, s) + view.path(s, r)[1:]
            side = tuple(v if t == s else t for t in view.side_of(s))
            yield side, view.other_side(s), paths


def _disjoint_branch_chord(graph: SimplicialGraph, view: K33View, report: BadEdgeReport):
    """
    Chord v-w with v on [a,x] and w on [c,z]; when the branch [b,y] avoiding
    both is subdivided, v-w replaces it.
    """
    for record in report.of_class(BadEdgeClass.NON_ESS_DISJOINT_BRANCHES):
        v, w = record.u, record.w
        a, x = view.ends(v)
        if a not in view.sides[0]:
            a, x = x, a
        c, z = view.ends(w)
        if c not in view.sides[0]:
            c, z = z, c
        b = next(t for t in view.sides[0] if t not in (a, c))
        y = next(t for t in view.sides[1] if t not in (x, z))
        if len(view.path(b, y)) < 3:
            continue
        first, second = view.path(a, x), view.path(c, z)
        paths = {
            frozenset((v, w)): (v, w),
            frozenset((v, a)): segment(first, v, a),
            frozenset((v, x)): segment(first, v, x),
            frozenset((c, w)): segment(second, c, w),
            frozenset((z, w)): segment(second, z, w),
            frozenset((c, a)): view.path(c, y) + view.path(y, a)[1:],
            frozenset((c, x)): view.path(c, x),
            frozenset((z, a)): view.path(z, a),
            frozenset((z, x)): view.path(z, b) + view.path(b, x)[1:],
        }
        yield (v, c, z), (w, a, x), paths


def _sibling_pair_contact(graph: SimplicialGraph, view: K33View, report: BadEdgeReport):
    """Interior v of [p,q] adjacent to both siblings of p: v replaces q."""
    essential = set(view.sides[0] + view.sides[1])
    contacts = sorted({
        r.u if r.u not in essential else r.w
        for r in report.of_class(BadEdgeClass.ESS_TO_DISJOINT_BRANCH)
    })
    for v in contacts:
        for p, q in (view.ends(v), tuple(reversed(view.ends(v)))):
            siblings = view.siblings(p)
            if not all(graph.has_edge(v, s) for s in siblings):
                continue
            paths = view.without(q)
            paths[frozenset((v, p))] = segment(view.path(p, q), v, p)
            for s in siblings:
                paths[frozenset((v, s))] = (v, s)
            side = tuple(v if t == q else t for t in view.side_of(q))
            yield view.side_of(p), side, paths


def _sibling_cross_contact(graph: SimplicialGraph, view: K33View, report: BadEdgeReport):
    """
    Interior v of [p,q] adjacent to a sibling s of p and to an interior u of
    [s2,t] (s2 the other sibling, t != q): sides {p,s,u} and {v,t,t2}.
    """
    essential = set(view.sides[0] + view.sides[1])
    contacts = sorted({
        r.u if r.u not in essential else r.w
        for r in report.of_class(BadEdgeClass.ESS_TO_DISJOINT_BRANCH)
    })
    for v in contacts:
        for p, q in (view.ends(v), tuple(reversed(view.ends(v)))):
            for s in view.siblings(p):
                if not graph.has_edge(v, s):
                    continue
                s2 = next(t for t in view.siblings(p) if t != s)
                for t in view.siblings(q):
                    t2 = next(o for o in view.siblings(q) if o != t)
                    cross = view.path(s2, t)
                    for u in cross[1:-1]:
                        if not graph.has_edge(u, v):
                            continue
                        paths = {
                            frozenset((p, v)): segment(view.path(p, q), p, v),
                            frozenset((s, v)): (s, v),
                            frozenset((u, v)): (u, v),
                            frozenset((u, t)): segment(cross, u, t),
                            frozenset((u, t2)): segment(cross, u, s2) + view.path(s2, t2)[1:],
                            frozenset((p, t)): view.path(p, t),
                            frozenset((p, t2)): view.path(p, t2),
                            frozenset((s, t)): view.path(s, t),
                            frozenset((s, t2)): view.path(s, t2),
                        }
                        yield (p, s, u), (v, t, t2), paths


def _path_center(graph: SimplicialGraph, side: Tuple[str, ...]) -> Optional[str]:
    for s in side:
        if all(graph.has_edge(s, t) for t in side if t != s):
            return s
    return None


def _two_sided_path_contact(graph: SimplicialGraph, view: K33View, report: BadEdgeReport):
    """Both sides carry a two-edge path of bad edges: swap the two centres."""
    one, two = view.sides
    s1, s2 = _path_center(graph, one), _path_center(graph, two)
    if s1 is None or s2 is None:
        return
    rest_one = tuple(t for t in one if t != s1)
    rest_two = tuple(t for t in two if t != s2)
    paths = {frozenset((s1, s2)): view.path(s1, s2)}
    for t in rest_one:
        paths[frozenset((t, s1))] = (t, s1)
        for u in rest_two:
            paths[frozenset((t, u))] = view.path(t, u)
    for u in rest_two:
        paths[frozenset((s2, u))] = (s2, u)
    yield rest_one + (s2,), (s1,) + rest_two, paths


RULES: List[Tuple[RewriteRule, Callable]] = [
    (RewriteRule.BRANCH_CHORD, _branch_chord),
    (RewriteRule.ADJACENT_BRANCH_CHORD, _adjacent_branch_chord),
    (RewriteRule.DISJOINT_BRANCH_CHORD, _disjoint_branch_chord),
    (RewriteRule.SIBLING_PAIR_CONTACT, _sibling_pair_contact),
    (RewriteRule.SIBLING_CROSS_CONTACT, _sibling_cross_contact),
    (RewriteRule.TWO_SIDED_PATH_CONTACT, _two_sided_path_contact),
]


# ============================================================================
# DRIVER
# ============================================================================

def _candidates(graph: SimplicialGraph, embedding: SubdivisionEmbedding, report: BadEdgeReport
                ) -> Iterator[Tuple[RewriteRule, SubdivisionEmbedding]]:
    view = K33View(embedding)
    for rule, generator in RULES:
        for side_one, side_two, paths in generator(graph, view, report):
            try:
                candidate = k33_embedding(side_one, side_two, paths)
            except PatternMismatch:
                continue
            yield rule, candidate


def find_shortening(graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                    report: Optional[BadEdgeReport] = None
                    ) -> Optional[Tuple[RewriteRule, SubdivisionEmbedding]]:
    """
    First rewrite, in rule order, that strictly decreases (B, length).

    Args:
        graph: Host graph
        embedding: K33 embedding valid in graph
        report: Its bad-edge report (computed when omitted)

    Returns:
        (rule, new embedding) or None
    """
    if embedding.pattern is not PatternId.K33:
        return None
    if report is None:
        report = classify_bad_edges(graph, embedding)
    current = (report.count, embedding.length)

    for rule, candidate in _candidates(graph, embedding, report):
        if embedding_errors(graph, candidate, check_pattern=False):
            logger.debug(f"{rule.value}: candidate rejected as invalid")
            continue
        score = (count_bad_edges(graph, candidate), candidate.length)
        if score < current:
            logger.debug(f"{rule.value}: (B, length) {current} -> {score}")
            return rule, candidate
    return None


def improve(graph: SimplicialGraph, embedding: SubdivisionEmbedding
            ) -> Tuple[SubdivisionEmbedding, List[RewriteRule]]:
    """Apply shortening rewrites until none applies."""
    applied: List[RewriteRule] = []
    while True:
        found = find_shortening(graph, embedding)
        if found is None:
            return embedding, applied
        rule, embedding = found
        applied.append(rule)
