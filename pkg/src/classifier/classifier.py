"""
Boundary classifier: combines the graph predicates and a reduction
certificate into verdicts about the group's CAT(0) boundaries.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Union

from tqdm import tqdm

from src.classifier.verdicts import (
    CONNECTED,
    LOCALLY_CONNECTED,
    NO_LOCAL_CUT_POINTS,
    Verdict,
    VerdictKind,
    references,
)
from src.config.settings import CLASSIFIER_CONFIG, SEARCH_CONFIG
from src.config.strategies import FlatsStrategy
from src.graph.core import SimplicialGraph, find_triangle
from src.predicates.curvature import is_hyperbolic_racg
from src.predicates.flats import get_flats_criterion
from src.predicates.separation import InseparabilityReport, is_inseparable
from src.reduction.certificate import ReductionCertificate, TerminalKind, verify_certificate
from src.reduction.engine import ReductionEngine
from src.search.embedding import SubdivisionEmbedding
from src.search.patterns import PatternId
from src.search.planarity import find_planar_double, is_planar
from src.search.subdivision import SubdivisionSearch
from src.utils.errors import (
    DeadlineExceeded,
    GraphTooLarge,
    InvalidEmbedding,
    NotTriangleFree,
    ReductionStalled,
)
from src.witnesses.builders import WitnessBuilder
from src.witnesses.model import JoinOfCantorSets, SymbolicWitness

Witness = Union[SymbolicWitness, JoinOfCantorSets]


@dataclass
class ClassificationReport:
    """
    Everything the classifier established about one defining graph.

    Attributes:
        graph: Input graph
        graph_planar: Planarity of the graph
        kuratowski: K5/K33 subdivision when non-planar
        inseparability: Separator witnesses
        hyperbolic: No induced square
        isolated_flats: Result of the flats criterion
        flats_strategy: Label of that criterion
        induced_pi: Induced Pi pattern found in the input graph
        induced_pi_checked: Whether that search ran
        reduction: Reduction certificate for a non-planar graph
        reduction_verified: Independent check of the certificate
        reduction_skipped: Why the reduction did not run or did not finish
        planar_double: Vertex whose double is planar
        witness: Boundary witness for the reduction terminal
        verdicts: Verdicts in a fixed order
        notes: Statements about the input graph that are not verdicts
    """
    graph: SimplicialGraph
    graph_planar: bool
    kuratowski: Optional[SubdivisionEmbedding]
    inseparability: InseparabilityReport
    hyperbolic: bool
    isolated_flats: bool
    flats_strategy: str
    triangle_free: bool = True
    induced_pi: Optional[SubdivisionEmbedding] = None
    induced_pi_checked: bool = False
    reduction: Optional[ReductionCertificate] = None
    reduction_verified: Optional[bool] = None
    reduction_skipped: Optional[str] = None
    planar_double: Optional[str] = None
    witness: Optional[Witness] = None
    verdicts: List[Verdict] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def verdict_kinds(self) -> List[VerdictKind]:
        return [v.kind for v in self.verdicts]

    def has(self, kind: VerdictKind) -> bool:
        return kind in self.verdict_kinds

    def verdict(self, kind: VerdictKind) -> Optional[Verdict]:
        return next((v for v in self.verdicts if v.kind is kind), None)


class BoundaryClassifier:
    """
    Classifies RACG boundaries from the defining graph.

    Example:
        >>> classifier = BoundaryClassifier()
        >>> report = classifier.classify(generate('mobius', n=4))
        >>> report.verdict_kinds
        [<VerdictKind.CONDITIONALLY_NON_PLANAR: ...>, <VerdictKind.MENGER_CURVE: ...>, ...]
    """

    def __init__(self, config: Optional[dict] = None, budget: Optional[int] = None,
                 flats_strategy: Union[FlatsStrategy, str, None] = None,
                 deadline_seconds: Optional[float] = None, show_progress: Optional[bool] = None):
        """
        Args:
            config: Overrides for CLASSIFIER_CONFIG
            budget: Vertex budget for subdivision searches
            flats_strategy: Isolated-flats criterion (default strategy if None)
            deadline_seconds: Wall-clock limit for the reduction
            show_progress: tqdm bars
        """
        self.logger = logging.getLogger(self.__class__.__name__)
        self.config = {**CLASSIFIER_CONFIG, **(config or {})}
        self.budget = budget if budget is not None else SEARCH_CONFIG['budget']
        self.criterion = get_flats_criterion(flats_strategy)
        self.show_progress = bool(show_progress)
        self.engine = ReductionEngine(
            budget=self.budget, deadline_seconds=deadline_seconds, show_progress=show_progress
        )

    def classify(self, graph: SimplicialGraph) -> ClassificationReport:
        """
        Classify one defining graph.

        Args:
            graph: Defining graph

        Returns:
            ClassificationReport; a partial one (reduction skipped) when the
            graph exceeds the search budget

        Raises:
            NotTriangleFree: If graph has a triangle
        """
        triangle = find_triangle(graph)
        if triangle:
            raise NotTriangleFree(triangle)

        planar, kuratowski = is_planar(graph)
        self.logger.info(f"Graph is {'planar' if planar else 'non-planar'}")

        report = ClassificationReport(
            graph=graph,
            graph_planar=planar,
            kuratowski=kuratowski,
            inseparability=is_inseparable(graph),
            hyperbolic=is_hyperbolic_racg(graph),
            isolated_flats=self.criterion.check(graph),
            flats_strategy=self.criterion.label,
        )
        if not planar:
            self._analyze_non_planar(graph, report)

        report.verdicts = self._derive_verdicts(report)
        report.notes = self._derive_notes(report)
        self.logger.info(f"Verdicts: {[k.value for k in report.verdict_kinds]}")
        return report

    # ------------------------------------------------------------------
    # Non-planar graphs
    # ------------------------------------------------------------------

    def _analyze_non_planar(self, graph: SimplicialGraph, report: ClassificationReport):
        within_budget = len(graph) <= self.budget

        if self.config['check_induced_pi'] and within_budget:
            report.induced_pi = SubdivisionSearch(graph, budget=self.budget).find(PatternId.FIG5_LEFT)
            report.induced_pi_checked = True

        try:
            certificate = self.engine.reduce(graph)
        except (GraphTooLarge, DeadlineExceeded) as e:
            report.reduction_skipped = str(e)
            self.logger.warning(f"Reduction skipped: {e}")
        except ReductionStalled as e:
            report.reduction_skipped = str(e)
            self.logger.warning(f"Reduction stalled after {len(e.steps)} steps")
        else:
            report.reduction = certificate
            result = verify_certificate(certificate)
            report.reduction_verified = result.ok
            if not result.ok:
                self.logger.error(f"Reduction certificate failed verification: {result.diagnostics[0]}")
            elif self.config['attach_witnesses']:
                report.witness = self._terminal_witness(certificate)

        if self.config['probe_planar_doubles']:
            report.planar_double = find_planar_double(graph)

    def _terminal_witness(self, certificate: ReductionCertificate) -> Optional[Witness]:
        builder = WitnessBuilder(certificate.final_graph)
        build = {
            TerminalKind.INDUCED_K33: builder.k33,
            TerminalKind.FIG5_RIGHT: builder.fig5_right,
            TerminalKind.FIG5_LEFT: builder.pi,
        }[certificate.terminal]
        try:
            return build(certificate.terminal_embedding)
        except InvalidEmbedding as e:
            self.logger.warning(f"No witness for terminal {certificate.terminal.value}: {e}")
            return None

    # ------------------------------------------------------------------
    # Verdicts
    # ------------------------------------------------------------------

    def _derive_verdicts(self, report: ClassificationReport) -> List[Verdict]:
        """
        Verdicts whose hypotheses hold in report, in a fixed order.
        """
        verdicts: List[Verdict] = []
        inseparable = report.inseparability.inseparable

        if report.graph_planar:
            verdicts.append(Verdict(
                kind=VerdictKind.GRAPH_PLANAR_BOUNDARY,
                conclusion="every CAT(0) boundary is planar and W is virtually a 3-manifold group",
                hypotheses=("triangle-free", "defining graph is planar"),
                citation="a planar graph is an induced subgraph of a 2-sphere triangulation, "
                         "whose Davis complex is a 3-manifold containing this one convexly",
                references=references('davis'),
            ))
            if inseparable and report.hyperbolic:
                verdicts.append(Verdict(
                    kind=VerdictKind.SIERPINSKI_CARPET_CANDIDATE,
                    conclusion="the boundary is a Sierpinski carpet candidate",
                    hypotheses=("defining graph is planar", "inseparable", "hyperbolic"),
                    citation="Swiatkowski: planar inseparable hyperbolic right-angled Coxeter groups",
                    references=references('swiatkowski'),
                    notes=("a Sierpinski carpet boundary forces W to be virtually a 3-manifold group",),
                ))
            return verdicts

        if inseparable:
            verdicts.append(Verdict(
                kind=VerdictKind.CONDITIONALLY_NON_PLANAR,
                conclusion="the boundary is non-planar",
                hypotheses=("triangle-free", "inseparable", "defining graph is non-planar"),
                unchecked=(LOCALLY_CONNECTED, NO_LOCAL_CUT_POINTS),
                citation="a non-planar graph yields an embedded K33 in the boundary or an induced Pi "
                         "in a finite-index special subgroup, whose action rules out a planar carpet",
                references=references('kuratowski', 'claytor'),
            ))

        certificate = report.reduction
        verified = certificate is not None and bool(report.reduction_verified)
        if verified and certificate.terminal in (TerminalKind.INDUCED_K33, TerminalKind.FIG5_RIGHT):
            terminal = certificate.terminal
            verdicts.append(Verdict(
                kind=VerdictKind.EVERY_BOUNDARY_NON_PLANAR,
                conclusion="every CAT(0) boundary is non-planar",
                hypotheses=("triangle-free", "reduction certificate verifies",
                            f"terminal {terminal.value}"),
                citation="the terminal graph of a finite-index special subgroup has an embedded "
                         "K33 in its boundary",
                references=references('davis', 'kuratowski'),
                details={'terminal': terminal.value, 'doublings': certificate.doublings},
            ))

        if verified and certificate.terminal is TerminalKind.FIG5_LEFT:
            unchecked = (LOCALLY_CONNECTED, NO_LOCAL_CUT_POINTS)
            hypotheses = ("triangle-free", "induced Pi in a finite-index special subgroup")
            if inseparable:
                hypotheses += ("inseparable, so the boundary is connected",)
            else:
                unchecked = (CONNECTED,) + unchecked
            verdicts.append(Verdict(
                kind=VerdictKind.PI_OBSTRUCTION,
                conclusion="the boundary is non-planar",
                hypotheses=hypotheses,
                unchecked=unchecked,
                citation="the reflection in y fixes two poles and flips three circles of an "
                         "embedded figure, so the action does not extend to the sphere",
                references=references('claytor'),
                notes=("without the unchecked hypotheses the boundary may be planar: "
                       "the Pi graph doubles to a planar graph",),
                details={'terminal': certificate.terminal.value, 'doublings': certificate.doublings},
            ))

        if inseparable and (report.hyperbolic or report.isolated_flats):
            curvature = "hyperbolic" if report.hyperbolic else \
                f"isolated flats ({report.flats_strategy})"
            keys = ('bestvina-mess', 'bowditch', 'kapovich-kleiner')
            keys += ('moussong',) if report.hyperbolic else ('hruska-ruane', 'caprace')
            notes = ()
            if report.induced_pi is not None:
                notes = ("the input graph contains an induced Pi, which alone forces non-planarity "
                         "under these hypotheses",)
            verdicts.append(Verdict(
                kind=VerdictKind.MENGER_CURVE,
                conclusion="every CAT(0) boundary is the Menger curve",
                hypotheses=("triangle-free", "inseparable", "defining graph is non-planar", curvature),
                citation="one-dimensional (Bestvina-Mess), connected, locally connected and without "
                         "local cut points (Bowditch; Hruska-Ruane), and non-planar: "
                         "the Menger curve (Kapovich-Kleiner)",
                references=references(*keys),
                notes=notes,
                details={'flats_strategy': report.flats_strategy},
            ))

        if report.planar_double is not None:
            verdicts.append(Verdict(
                kind=VerdictKind.PLANAR_DOUBLE_BOUNDARY,
                conclusion="W has a planar CAT(0) boundary and is virtually a 3-manifold group",
                hypotheses=("triangle-free", f"the double over '{report.planar_double}' is planar"),
                citation="the double is the defining graph of an index two special subgroup, "
                         "and a planar defining graph gives a planar boundary",
                references=references('davis'),
                details={'vertex': report.planar_double},
            ))
        return verdicts

    def _derive_notes(self, report: ClassificationReport) -> List[str]:
        """Statements about the input graph that do not amount to a verdict."""
        notes = []
        if report.induced_pi is not None:
            condition = "connected, locally connected and without local cut points"
            if report.inseparability.inseparable:
                condition = "locally connected and without local cut points"
            hubs = ", ".join(sorted(report.induced_pi.essential_vertices))
            notes.append(
                f"the input graph contains an induced Pi on {hubs}: "
                f"the boundary is non-planar whenever it is {condition}"
            )
        return notes

    # ------------------------------------------------------------------
    # Batches
    # ------------------------------------------------------------------

    def classify_all(self, graphs: Mapping[str, SimplicialGraph]) -> Dict[str, ClassificationReport]:
        """
        Classify several named graphs.

        Returns:
            Name -> report, in input order
        """
        self.logger.info(f"Classifying {len(graphs)} graphs")
        return {
            name: self.classify(graph)
            for name, graph in tqdm(graphs.items(), desc="Classifying", disable=not self.show_progress)
        }


# ============================================================================
# CONVENIENCE FUNCTIONS
# ============================================================================

def classify(graph: SimplicialGraph, budget: Optional[int] = None,
             flats_strategy: Union[FlatsStrategy, str, None] = None) -> ClassificationReport:
    """
    Quick classification with default settings.

    Example:
        >>> report = classify(generate('mobius', n=4))
        >>> report.has(VerdictKind.MENGER_CURVE)
        True
    """
    return BoundaryClassifier(budget=budget, flats_strategy=flats_strategy).classify(graph)
