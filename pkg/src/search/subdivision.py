"""
Exact search for pattern subdivisions.

Backtracking over essential-vertex assignments in canonical order, then
branch-by-branch extension of internally disjoint paths. The optimising
searches prune with a lower bound on (bad edges, total length): bad edges
already forced by the placed vertices, and graph distances for every
branch still to be routed.
"""

import logging
from collections import deque
from enum import Enum
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
from tqdm import tqdm

from src.config.settings import SEARCH_CONFIG
from src.graph.core import SimplicialGraph
from src.search.bad_edges import BadEdgeReport, classify_bad_edges, count_bad_edges
from src.search.embedding import SubdivisionEmbedding
from src.search.patterns import BranchSpec, PatternId, PatternSpec, get_pattern
from src.utils.errors import GraphTooLarge
from src.utils.helpers import Deadline

logger = logging.getLogger(__name__)


class Objective(Enum):
    """What a search pass optimises"""
    FIRST = "first"                          # stop at the first embedding
    BAD_THEN_LENGTH = "bad-then-length"      # minimise (B, length)
    LENGTH = "length"                        # minimise length only


# Relations between two essential pattern vertices
_EXTRA = 'extra'            # must be adjacent, not a bad edge
_FORCED = 'forced'          # joined by a branch that must be an edge
_SUBDIVIDED = 'subdivided'  # joined by a branch that must be subdivided
_BRANCH = 'branch'          # joined by a free branch
_NONE = 'none'              # not joined in the pattern


def _pair_relations(spec: PatternSpec) -> Dict[Tuple[str, str], str]:
    extras = {frozenset(e) for e in spec.extra_edges}
    relations = {}
    for p in spec.essential:
        for q in spec.essential:
            if p == q:
                continue
            branches = spec.branches_between(p, q)
            if frozenset((p, q)) in extras:
                relation = _EXTRA
            elif not branches:
                relation = _NONE
            elif any(b.name in spec.forced_edges for b in branches):
                relation = _FORCED
            elif all(b.name in spec.forced_subdivided for b in branches):
                relation = _SUBDIVIDED
            else:
                relation = _BRANCH
            relations[(p, q)] = relation
    return relations


class _SearchRun:
    """Mutable state of one backtracking pass over a single pattern."""

    def __init__(self, search: 'SubdivisionSearch', spec: PatternSpec,
                 objective: Objective, max_bad: Optional[int] = None):
        self.search = search
        self.graph = search.graph
        self.spec = spec
        self.objective = objective
        self.max_bad = max_bad

        self.relation = _pair_relations(spec)
        self.floor = {
            p: [q for q, r in spec.order if r == p]
            for p in spec.essential
        }
        self.candidates = {
            p: [v for v in self.graph.vertices if self.graph.degree(v) >= spec.required_degree(p)]
            for p in spec.essential
        }
        # forced edges first, then pattern order
        self.routing: List[BranchSpec] = sorted(
            spec.branches, key=lambda b: b.name not in spec.forced_edges
        )
        self.spec_index = {b.name: i for i, b in enumerate(spec.branches)}
        self.parallel = {
            b.name: [o.name for o in spec.branches_between(b.start, b.end)]
            for b in spec.branches
        }

        self.images: Dict[str, str] = {}
        self.on = set()
        self.paths: Dict[str, Tuple[str, ...]] = {}
        self.bad = 0
        self.length = 0
        self.pending = 0
        self.bounds: Dict[str, int] = {}
        self.root_key: Tuple[str, ...] = ()

        self.best: Optional[SubdivisionEmbedding] = None
        self.best_key: Optional[Tuple[int, int]] = None
        self.best_order: Optional[tuple] = None
        self.roots = 0

    # ------------------------------------------------------------------
    # Bounds
    # ------------------------------------------------------------------

    def key(self, bad: int, length: int) -> Tuple[int, int]:
        if self.objective is Objective.LENGTH:
            return (0, length)
        return (bad, length)

    def prune(self, bad: int, length: int, tie_rule: bool = True) -> bool:
        if self.max_bad is not None and bad > self.max_bad:
            return True
        if self.objective is Objective.FIRST or self.best_key is None:
            return False
        key = self.key(bad, length)
        if key > self.best_key:
            return True
        return tie_rule and key == self.best_key and self.root_key > self.best_order[0]

    def offer(self, embedding: SubdivisionEmbedding, bad: int, length: int):
        key = self.key(bad, length)
        order = embedding.sort_key()
        if self.best_key is None or (key, order) < (self.best_key, self.best_order):
            self.best, self.best_key, self.best_order = embedding, key, order

    def _branch_bound(self, branch: BranchSpec) -> Optional[int]:
        if branch.name in self.spec.forced_edges:
            return 1
        floor = 2 if branch.name in self.spec.forced_subdivided else 1
        if self.objective is Objective.FIRST:
            return floor
        d = self.search.distances[self.images[branch.start]].get(self.images[branch.end])
        if d is None:
            return None
        return max(d, floor)

    def _distances_to(self, target: str) -> Dict[str, int]:
        """BFS distances to target through vertices not yet on the image."""
        dist = {target: 0}
        queue = deque([target])
        while queue:
            v = queue.popleft()
            for t in self.search.adjacency[v]:
                if t not in dist and t not in self.on:
                    dist[t] = dist[v] + 1
                    queue.append(t)
        return dist

    # ------------------------------------------------------------------
    # Essential assignment
    # ------------------------------------------------------------------

    def solutions(self) -> Iterator[Tuple[SubdivisionEmbedding, int, int]]:
        yield from self._assign(0)

    def _assign(self, index: int):
        spec = self.spec
        if index == len(spec.essential):
            yield from self._root()
            return

        p = spec.essential[index]
        lower = max((self.images[q] for q in self.floor[p]), default=None)
        candidates = self.candidates[p]
        if index == 0:
            candidates = tqdm(
                candidates,
                desc=f"{spec.pattern.value} roots",
                disable=not self.search.show_progress,
                leave=False,
            )

        for v in candidates:
            if v in self.on or (lower is not None and v <= lower):
                continue
            added = 0
            feasible = True
            for q, image in self.images.items():
                relation = self.relation[(p, q)]
                adjacent = self.graph.has_edge(v, image)
                if relation in (_EXTRA, _FORCED):
                    if not adjacent:
                        feasible = False
                        break
                elif adjacent and relation in (_NONE, _SUBDIVIDED):
                    added += 1
            if not feasible or self.prune(self.bad + added, 0, tie_rule=False):
                continue

            self.images[p] = v
            self.on.add(v)
            self.bad += added
            yield from self._assign(index + 1)
            self.bad -= added
            self.on.discard(v)
            del self.images[p]

    def _root(self):
        self.search.deadline.check('subdivision search')
        self.root_key = tuple(sorted(self.images.values()))
        bounds = {}
        for branch in self.spec.branches:
            bound = self._branch_bound(branch)
            if bound is None:
                return
            bounds[branch.name] = bound
        self.bounds = bounds
        self.pending = sum(bounds.values())
        if self.prune(self.bad, self.pending):
            return
        self.roots += 1
        yield from self._route(0)

    # ------------------------------------------------------------------
    # Path routing
    # ------------------------------------------------------------------

    def _route(self, k: int):
        if k == len(self.routing):
            embedding = SubdivisionEmbedding(self.spec.pattern, dict(self.images), dict(self.paths))
            yield embedding, self.bad, self.length
            return

        branch = self.routing[k]
        start, target = self.images[branch.start], self.images[branch.end]
        self.pending -= self.bounds[branch.name]
        if branch.name in self.spec.forced_edges:
            yield from self._close(k, branch, [start], target, 0)
        else:
            dist = None if self.objective is Objective.FIRST else self._distances_to(target)
            yield from self._extend(k, branch, [start], target, dist, 0)
        self.pending += self.bounds[branch.name]

    def _extend(self, k: int, branch: BranchSpec, path: List[str], target: str,
                dist: Optional[Dict[str, int]], adj_target: int):
        """
        Grow path one vertex at a time. adj_target counts interior vertices
        other than the last one that are adjacent to target; each becomes a
        bad edge once the path closes.
        """
        neighbor_sets = self.search.neighbor_sets
        current = path[-1]
        for t in self.search.adjacency[current]:
            if t == target:
                yield from self._close(k, branch, path, target, adj_target)
                continue
            if t in self.on:
                continue
            remaining = 1
            if dist is not None:
                if t not in dist:
                    continue
                remaining = dist[t]

            carried = adj_target + (1 if len(path) > 1 and target in neighbor_sets[current] else 0)
            nbrs = neighbor_sets[t]
            added = sum(1 for s in nbrs if s in self.on) - 1 - (1 if target in nbrs else 0)
            if self.prune(self.bad + added + carried, self.length + len(path) + remaining + self.pending):
                continue

            self.on.add(t)
            self.bad += added
            path.append(t)
            yield from self._extend(k, branch, path, target, dist, carried)
            path.pop()
            self.bad -= added
            self.on.discard(t)

    def _close(self, k: int, branch: BranchSpec, path: List[str], target: str, adj_target: int):
        if len(path) == 1 and branch.name in self.spec.forced_subdivided:
            return
        full = tuple(path) + (target,)

        # parallel branches (Theta) are routed in increasing path order
        position = self.spec_index[branch.name]
        group = self.parallel[branch.name]
        for other in group:
            if other == branch.name or other not in self.paths:
                continue
            if self.spec_index[other] < position and self.paths[other] >= full:
                return
            if self.spec_index[other] > position and self.paths[other] <= full:
                return

        added = adj_target
        start = path[0]
        if (self.relation[(branch.start, branch.end)] == _BRANCH
                and self.graph.has_edge(start, target)
                and all(o in self.paths or o == branch.name for o in group)
                and len(full) > 2
                and all(len(self.paths[o]) > 2 for o in group if o != branch.name)):
            added += 1

        length = len(full) - 1
        if self.prune(self.bad + added, self.length + length + self.pending):
            return

        self.paths[branch.name] = full
        self.bad += added
        self.length += length
        yield from self._route(k + 1)
        self.length -= length
        self.bad -= added
        del self.paths[branch.name]


# ============================================================================
# SEARCH FACADE
# ============================================================================

class SubdivisionSearch:
    """
    Exact subdivision search on one graph.

    Example:
        >>> search = SubdivisionSearch(graph)
        >>> embedding, report = search.select_canonical_k33()
    """

    def __init__(self, graph: SimplicialGraph, config: Optional[dict] = None,
                 budget: Optional[int] = None, show_progress: Optional[bool] = None,
                 deadline: Optional[Deadline] = None):
        """
        Args:
            graph: Host graph
            config: Overrides for SEARCH_CONFIG
            budget: Largest accepted vertex count (overrides config)
            show_progress: tqdm bar over root assignments (overrides config)
            deadline: Cooperative deadline checked once per root assignment

        Raises:
            GraphTooLarge: If graph has more vertices than the budget
        """
        self.config = {**SEARCH_CONFIG, **(config or {})}
        self.budget = budget if budget is not None else self.config['budget']
        self.show_progress = (
            show_progress if show_progress is not None else self.config['show_progress']
        )
        self.deadline = deadline or Deadline()
        self.logger = logging.getLogger(self.__class__.__name__)

        if len(graph) > self.budget:
            raise GraphTooLarge(len(graph), self.budget)

        self.graph = graph
        self.adjacency = {v: tuple(sorted(graph.neighbors(v))) for v in graph.vertices}
        self.neighbor_sets = {v: graph.neighbors(v) for v in graph.vertices}

    @cached_property
    def distances(self) -> Dict[str, Dict[str, int]]:
        return dict(nx.all_pairs_shortest_path_length(self.graph.nx))

    @cached_property
    def planar(self) -> bool:
        return nx.check_planarity(self.graph.nx)[0]

    def _hopeless(self, spec: PatternSpec) -> bool:
        # every pattern but Theta contains K5 or K33
        return spec.pattern is not PatternId.THETA and self.planar

    def _run(self, spec: PatternSpec, objective: Objective, max_bad: Optional[int] = None,
             seed: Optional[SubdivisionEmbedding] = None) -> Optional[SubdivisionEmbedding]:
        run = _SearchRun(self, spec, objective, max_bad)
        if seed is not None:
            run.offer(seed, count_bad_edges(self.graph, seed), seed.length)

        for embedding, bad, length in run.solutions():
            if objective is Objective.FIRST:
                self.logger.debug(f"{spec.pattern.value} found after {run.roots} roots")
                return embedding
            run.offer(embedding, bad, length)

        self.logger.debug(
            f"{spec.pattern.value} {objective.value} search explored {run.roots} roots"
        )
        return run.best

    def find(self, pattern, max_bad: Optional[int] = None) -> Optional[SubdivisionEmbedding]:
        """
        First embedding of pattern in canonical search order.

        Args:
            pattern: PatternId or its string value
            max_bad: Optional cap on bad edges (extra pattern edges excluded)

        Returns:
            SubdivisionEmbedding or None
        """
        spec = get_pattern(pattern)
        if self._hopeless(spec):
            return None
        if spec.induced:
            max_bad = 0
        return self._run(spec, Objective.FIRST, max_bad=max_bad)

    def shortest(self, pattern) -> Optional[SubdivisionEmbedding]:
        """Embedding of pattern with the fewest edges (canonical tie-break)."""
        spec = get_pattern(pattern)
        if self._hopeless(spec):
            return None
        return self._run(spec, Objective.LENGTH, max_bad=0 if spec.induced else None)

    def select_canonical_k33(self, seed: Optional[SubdivisionEmbedding] = None
                             ) -> Optional[Tuple[SubdivisionEmbedding, BadEdgeReport]]:
        """
        K33 embedding minimising (B, length, canonical order).

        Args:
            seed: Known K33 embedding used as the initial bound

        Returns:
            (embedding, report) or None if the graph has no K33 subdivision
        """
        spec = get_pattern(PatternId.K33)
        if self._hopeless(spec):
            return None
        best = self._run(spec, Objective.BAD_THEN_LENGTH, seed=seed)
        if best is None:
            return None
        report = classify_bad_edges(self.graph, best, validate=False)
        self.logger.info(
            f"Canonical K33: B = {report.count}, length = {best.length}, "
            f"sides {best.sides[0]} | {best.sides[1]}"
        )
        return best, report

    def find_k33_below(self, max_bad: int) -> Optional[SubdivisionEmbedding]:
        """First K33 embedding with at most max_bad bad edges."""
        if max_bad < 0 or self._hopeless(get_pattern(PatternId.K33)):
            return None
        return self._run(get_pattern(PatternId.K33), Objective.FIRST, max_bad=max_bad)


# ============================================================================
# CONVENIENCE FUNCTIONS
# ============================================================================

def find_subdivision(graph: SimplicialGraph, pattern, budget: Optional[int] = None
                     ) -> Optional[SubdivisionEmbedding]:
    """
    Quick subdivision search.

    Example:
        >>> find_subdivision(graph, PatternId.K33)
    """
    return SubdivisionSearch(graph, budget=budget).find(pattern)


def select_canonical_k33(graph: SimplicialGraph, budget: Optional[int] = None,
                         seed: Optional[SubdivisionEmbedding] = None,
                         deadline: Optional[Deadline] = None
                         ) -> Optional[Tuple[SubdivisionEmbedding, BadEdgeReport]]:
    return SubdivisionSearch(graph, budget=budget, deadline=deadline).select_canonical_k33(seed)
