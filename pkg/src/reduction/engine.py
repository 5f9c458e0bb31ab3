"""
Reduction engine: from a non-planar triangle-free graph to a certified
terminal K33 configuration through a sequence of doublings.

Each round selects the canonical K33 subdivision of the current graph and
decides one step:
1. no bad edges: terminal induced K33
2. induced K33-plus-side-edges pattern: terminal
3. a shortening rewrite in the same graph
4. a double with a constructed K33 that has fewer bad edges
5. a searched double, over bad-edge endpoints first, then any vertex

When none of these lowers the bad-edge count the reduction stalls.
"""

import logging
from typing import Iterator, List, Optional, Tuple

from src.config.settings import REDUCTION_CONFIG, SEARCH_CONFIG
from src.graph.core import SimplicialGraph, find_triangle
from src.reduction.certificate import (
    Double,
    ReductionCertificate,
    ReductionStep,
    ShortenRewrite,
    Terminal,
)
from src.reduction.k5 import k5_to_k33
from src.reduction.moves import (
    Move,
    endpoint_double,
    exhaustive_double,
    mirror_side,
    reroute_through_copy,
)
from src.reduction.rewrites import find_shortening
from src.reduction.terminals import match_terminal
from src.search.bad_edges import BadEdgeReport, classify_bad_edges, count_bad_edges
from src.search.embedding import SubdivisionEmbedding, embedding_errors
from src.search.patterns import PatternId
from src.search.planarity import kuratowski_witness
from src.search.subdivision import SubdivisionSearch
from src.utils.errors import (
    GraphTooLarge,
    InternalInvariantViolation,
    NotTriangleFree,
    PlanarInput,
    ReductionStalled,
)
from src.utils.helpers import Deadline


class ReductionEngine:
    """
    Runs reductions and single reduction steps.

    Example:
        >>> engine = ReductionEngine()
        >>> certificate = engine.reduce(graph)
        >>> certificate.terminal
        <TerminalKind.INDUCED_K33: 'InducedK33'>
    """

    def __init__(self, config: Optional[dict] = None, budget: Optional[int] = None,
                 deadline_seconds: Optional[float] = None, show_progress: Optional[bool] = None):
        """
        Args:
            config: Overrides for REDUCTION_CONFIG
            budget: Vertex budget for the input graph (SEARCH_BUDGET by default)
            deadline_seconds: Wall-clock limit for one reduce call
            show_progress: tqdm bars in the subdivision search
        """
        self.config = {**REDUCTION_CONFIG, **(config or {})}
        self.budget = budget if budget is not None else SEARCH_CONFIG['budget']
        if deadline_seconds is not None:
            self.config['deadline_seconds'] = deadline_seconds
        self.show_progress = show_progress
        self.deadline = Deadline(self.config['deadline_seconds'])
        self.logger = logging.getLogger(self.__class__.__name__)

    @property
    def intermediate_budget(self) -> int:
        """Doubles of an in-budget input may exceed the budget."""
        return self.config.get('intermediate_budget') or 2 * self.budget

    def _search(self, graph: SimplicialGraph) -> SubdivisionSearch:
        return SubdivisionSearch(
            graph,
            budget=self.intermediate_budget,
            show_progress=self.show_progress,
            deadline=self.deadline,
        )

    # ------------------------------------------------------------------
    # Single step
    # ------------------------------------------------------------------

    def reduce_step(self, graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                    report: Optional[BadEdgeReport] = None) -> ReductionStep:
        """
        Decide one reduction step for a K33 embedding.

        Args:
            graph: Current graph
            embedding: K33 embedding valid in graph (canonical in a reduce run)
            report: Its bad-edge report (computed when omitted)

        Returns:
            ReductionStep with a Terminal, ShortenRewrite or Double action

        Raises:
            NotTriangleFree: If graph has a triangle
            GraphTooLarge: If the fallback search exceeds its budget
            ReductionStalled: If no move lowers the bad-edge count
        """
        triangle = find_triangle(graph)
        if triangle:
            raise NotTriangleFree(triangle)
        if report is None:
            report = classify_bad_edges(graph, embedding)

        def step(action) -> ReductionStep:
            return ReductionStep(graph_before=graph, embedding=embedding, report=report, action=action)

        terminal = match_terminal(graph, embedding, report)
        if terminal is not None:
            kind, _ = terminal
            self.logger.info(f"Terminal {kind.value} with B = {report.count}")
            return step(Terminal(kind))

        shortening = find_shortening(graph, embedding, report)
        if shortening is not None:
            rule, successor = shortening
            self.logger.info(f"Shortening rewrite {rule.value}")
            return step(ShortenRewrite(rule, successor))

        move = self._first_double(graph, embedding, report)
        if move is None:
            raise ReductionStalled(graph, embedding, report)
        rule, doubled, successor = move
        self.logger.info(
            f"Double over '{doubled.doubled_vertex}' ({rule.value}): "
            f"B {report.count} -> {count_bad_edges(doubled.graph, successor)}"
        )
        return step(Double(doubled.doubled_vertex, doubled.generation, rule, successor))

    def _moves(self, graph: SimplicialGraph, embedding: SubdivisionEmbedding,
               report: BadEdgeReport) -> Iterator[Move]:
        yield from reroute_through_copy(graph, embedding, report)
        yield from mirror_side(graph, embedding, report)
        if self.config['endpoint_fallback']:
            self.logger.info(
                f"Constructions failed at B = {report.count}; searching doubles over bad-edge endpoints"
            )
            yield from endpoint_double(
                graph, embedding, report, budget=self.intermediate_budget, deadline=self.deadline
            )
        if self.config['exhaustive_fallback']:
            self.logger.warning(f"No endpoint double lowers B = {report.count}; trying every other double")
            yield from exhaustive_double(
                graph, embedding, report, budget=self.intermediate_budget, deadline=self.deadline
            )

    def _first_double(self, graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                      report: BadEdgeReport) -> Optional[Move]:
        for rule, doubled, successor in self._moves(graph, embedding, report):
            self.deadline.check(rule.value)
            if embedding_errors(doubled.graph, successor, check_pattern=False):
                self.logger.debug(f"{rule.value} over '{doubled.doubled_vertex}': invalid")
                continue
            bad = count_bad_edges(doubled.graph, successor)
            if bad < report.count:
                return rule, doubled, successor
            self.logger.debug(
                f"{rule.value} over '{doubled.doubled_vertex}': B = {bad} not below {report.count}"
            )
        return None

    # ------------------------------------------------------------------
    # Full reduction
    # ------------------------------------------------------------------

    def _canonical(self, graph: SimplicialGraph, seed: Optional[SubdivisionEmbedding]
                   ) -> Tuple[SubdivisionEmbedding, BadEdgeReport]:
        if (seed is not None and self.config['skip_terminal_reselection']
                and count_bad_edges(graph, seed) == 0):
            return seed, classify_bad_edges(graph, seed, validate=False)
        selected = self._search(graph).select_canonical_k33(seed=seed)
        if selected is None:
            raise InternalInvariantViolation("Graph lost its K33 subdivision during reduction")
        return selected

    def reduce(self, graph: SimplicialGraph) -> ReductionCertificate:
        """
        Reduce a graph to a terminal configuration.

        Args:
            graph: Triangle-free, non-planar graph within budget

        Returns:
            ReductionCertificate

        Raises:
            NotTriangleFree: If graph has a triangle
            PlanarInput: If graph is planar
            GraphTooLarge: If graph exceeds the budget
            DeadlineExceeded: If the deadline passes
            ReductionStalled: If no move lowers the bad-edge count; carries the
                steps taken so far
        """
        triangle = find_triangle(graph)
        if triangle:
            raise NotTriangleFree(triangle)
        if len(graph) > self.budget:
            raise GraphTooLarge(len(graph), self.budget)

        self.deadline = Deadline(self.config['deadline_seconds'])
        witness = kuratowski_witness(graph)
        if witness is None:
            raise PlanarInput("Graph is planar; there is nothing to reduce")

        steps: List[ReductionStep] = []
        doublings: List[str] = []
        current = graph
        seed: Optional[SubdivisionEmbedding] = witness

        if witness.pattern is PatternId.K5:
            conversion = k5_to_k33(graph, witness, budget=self.budget)
            k5_report = classify_bad_edges(graph, conversion.source, validate=False)
            if conversion.doubling is None:
                action = ShortenRewrite(conversion.rule, conversion.embedding)
            else:
                action = Double(
                    conversion.doubling.doubled_vertex,
                    conversion.doubling.generation,
                    conversion.rule,
                    conversion.embedding,
                )
                doublings.append(conversion.doubling.doubled_vertex)
            steps.append(ReductionStep(graph, conversion.source, k5_report, action))
            current, seed = conversion.graph, conversion.embedding

        while True:
            self.deadline.check('reduce')
            embedding, report = self._canonical(current, seed)
            try:
                step = self.reduce_step(current, embedding, report)
            except ReductionStalled as e:
                e.steps = list(steps)
                self.logger.warning(f"{e} (after {len(doublings)} doublings)")
                raise
            steps.append(step)
            action = step.action

            if isinstance(action, Terminal):
                _, terminal_embedding = match_terminal(current, embedding, report)
                certificate = ReductionCertificate(
                    initial_graph=graph,
                    steps=steps,
                    terminal=action.kind,
                    terminal_embedding=terminal_embedding,
                    doubling_sequence=doublings,
                )
                initial_bad = certificate.initial_bad
                assert certificate.doublings <= initial_bad + 1, "Doubling count exceeds B0 + 1"
                self.logger.info(
                    f"Reduction finished: {action.kind.value} after {certificate.doublings} doublings"
                )
                return certificate

            if isinstance(action, Double):
                current = step.graph_after()
                doublings.append(action.vertex)
            seed = action.successor


# ============================================================================
# CONVENIENCE FUNCTIONS
# ============================================================================

def reduce(graph: SimplicialGraph, budget: Optional[int] = None,
           deadline_seconds: Optional[float] = None) -> ReductionCertificate:
    """
    Quick reduction with default settings.

    Example:
        >>> certificate = reduce(generate('pi', branches=1))
    """
    return ReductionEngine(budget=budget, deadline_seconds=deadline_seconds).reduce(graph)


def reduce_step(graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                report: Optional[BadEdgeReport] = None) -> ReductionStep:
    return ReductionEngine().reduce_step(graph, embedding, report)

