"""
Plain-text rendering of classification reports, reduction certificates
and witnesses for the command line.
"""

import logging
from typing import List, Optional, Union

from colorama import Fore, Style

from src.classifier.classifier import ClassificationReport
from src.classifier.verdicts import Verdict
from src.graph.core import SimplicialGraph
from src.reduction.certificate import Double, ReductionCertificate, ShortenRewrite, VerificationResult
from src.search.embedding import SubdivisionEmbedding
from src.witnesses.model import JoinOfCantorSets, SymbolicWitness

WIDTH = 80


class ReportFormatter:
    """
    Banner-delimited text reports.

    Args:
        color: Wrap verdicts and PASS/FAIL markers in ANSI colours
    """

    def __init__(self, color: bool = False):
        self.color = color
        self.logger = logging.getLogger(self.__class__.__name__)

    # ------------------------------------------------------------------
    # Building blocks
    # ------------------------------------------------------------------

    def _paint(self, text: str, colour: str) -> str:
        return f"{colour}{text}{Style.RESET_ALL}" if self.color else text

    def _banner(self, title: str) -> List[str]:
        return ["=" * WIDTH, title, "=" * WIDTH]

    def status(self, ok: bool) -> str:
        return self._paint("PASS", Fore.GREEN) if ok else self._paint("FAIL", Fore.RED)

    @staticmethod
    def _graph_line(graph: SimplicialGraph) -> str:
        return f"Graph: {len(graph)} vertices, {len(graph.edges)} edges"

    @staticmethod
    def _embedding_lines(embedding: SubdivisionEmbedding, indent: str = "  ") -> List[str]:
        roles = ", ".join(f"{p}={v}" for p, v in sorted(embedding.essential_map.items()))
        lines = [f"{indent}{embedding.pattern.value}: {roles}"]
        for name, path in sorted(embedding.branches.items()):
            lines.append(f"{indent}  [{name}] {' - '.join(path)}")
        return lines

    def _verification_lines(self, result: VerificationResult) -> List[str]:
        lines = [f"Verification: {self.status(result.ok)}"]
        lines.extend(f"  - {d}" for d in result.diagnostics)
        return lines

    def _verdict_lines(self, verdict: Verdict) -> List[str]:
        tag = self._paint(verdict.kind.value, Fore.YELLOW if verdict.conditional else Fore.CYAN)
        lines = [f"* {tag}: {verdict.conclusion}"]
        lines.extend(f"    given: {h}" for h in verdict.hypotheses)
        lines.extend(f"    unchecked: {h}" for h in verdict.unchecked)
        if verdict.citation:
            lines.append(f"    source: {verdict.citation}")
        lines.extend(f"    see: {r}" for r in verdict.references)
        lines.extend(f"    note: {n}" for n in verdict.notes)
        for key in sorted(verdict.details):
            lines.append(f"    {key}: {verdict.details[key]}")
        return lines

    # ------------------------------------------------------------------
    # Reports
    # ------------------------------------------------------------------

    def format_report(self, report: ClassificationReport) -> str:
        lines = self._banner("RACG BOUNDARY CLASSIFICATION")
        lines.append(self._graph_line(report.graph))
        lines.append("")

        lines.append("Graph properties:")
        lines.append(f"  planar:         {report.graph_planar}")
        insep = report.inseparability
        lines.append(f"  inseparable:    {insep.inseparable}")
        for name, witness in insep.witnesses().items():
            if witness:
                lines.append(f"    {name.replace('_', ' ')}: {{{', '.join(witness)}}}")
        if not insep.connected:
            lines.append("    graph is disconnected")
        lines.append(f"  hyperbolic:     {report.hyperbolic}")
        lines.append(f"  isolated flats: {report.isolated_flats} ({report.flats_strategy})")
        if report.induced_pi_checked:
            lines.append(f"  induced Pi:     {report.induced_pi is not None}")
        if report.planar_double is not None:
            lines.append(f"  planar double:  over '{report.planar_double}'")
        lines.append("")

        if report.kuratowski is not None:
            lines.append("Kuratowski subgraph:")
            lines.extend(self._embedding_lines(report.kuratowski))
            lines.append("")

        if report.reduction_skipped:
            lines.append(f"Reduction skipped: {report.reduction_skipped}")
            lines.append("")
        elif report.reduction is not None:
            cert = report.reduction
            lines.append(
                f"Reduction: terminal {cert.terminal.value} after {cert.doublings} doublings, "
                f"certificate {self.status(bool(report.reduction_verified))}"
            )
            lines.append("")

        if report.witness is not None:
            lines.append("Boundary witness:")
            lines.extend(self._witness_lines(report.witness))
            lines.append("")

        lines.append("Verdicts:")
        if not report.verdicts:
            lines.append("  (none)")
        for verdict in report.verdicts:
            lines.extend(self._verdict_lines(verdict))
        if report.notes:
            lines.append("")
            lines.append("Notes:")
            lines.extend(f"  - {n}" for n in report.notes)
        lines.append("=" * WIDTH)
        return "\n".join(lines) + "\n"

    def format_certificate(self, certificate: ReductionCertificate,
                           result: Optional[VerificationResult] = None) -> str:
        lines = self._banner("REDUCTION CERTIFICATE")
        lines.append(self._graph_line(certificate.initial_graph))
        lines.append(f"Terminal: {certificate.terminal.value}")
        sequence = ", ".join(certificate.doubling_sequence) or "(none)"
        lines.append(f"Doublings: {certificate.doublings} [{sequence}]")
        lines.append("")

        for index, step in enumerate(certificate.steps):
            action = step.action
            if isinstance(action, ShortenRewrite):
                move = f"rewrite {action.rule.value}"
            elif isinstance(action, Double):
                move = f"double over '{action.vertex}' ({action.rule.value})"
            else:
                move = f"terminal {action.kind.value}"
            lines.append(
                f"Step {index}: {step.embedding.pattern.value}, B = {step.bad}, "
                f"length {step.embedding.length} -> {move}"
            )
            for record in step.report.bad_edges:
                lines.append(f"    bad edge {record.u}-{record.w} ({record.edge_class.value})")
        lines.append("")
        lines.append("Terminal embedding:")
        lines.extend(self._embedding_lines(certificate.terminal_embedding))
        if result is not None:
            lines.append("")
            lines.extend(self._verification_lines(result))
        lines.append("=" * WIDTH)
        return "\n".join(lines) + "\n"

    def _witness_lines(self, witness: Union[SymbolicWitness, JoinOfCantorSets]) -> List[str]:
        if isinstance(witness, JoinOfCantorSets):
            return [
                "  join of Cantor sets (abstract K33 with no subdivided branch)",
                f"    sides {{{', '.join(witness.side_one)}}} and {{{', '.join(witness.side_two)}}}",
            ]
        lines = [f"  type: {witness.claimed_type.value}"]
        lines.append(f"  points: {', '.join(p.label for p in witness.points)}")
        for circle in witness.circles:
            lines.append(f"  circle {circle.name}: cycle {'-'.join(circle.cycle)}")
        for arc in witness.arcs:
            lines.append(f"  arc {arc.name}: {arc.start} -> {arc.end} on {'-'.join(arc.provenance)}")
        if witness.poles:
            lines.append(f"  poles: {', '.join(witness.poles)}")
        if witness.involution is not None:
            flips = ", ".join(sorted(witness.involution.flips))
            lines.append(f"  involution: reflection in {witness.involution.generator}, flips {flips}")
        return lines

    def format_witness(self, witness: Union[SymbolicWitness, JoinOfCantorSets],
                       result: Optional[VerificationResult] = None,
                       obstruction: Optional[bool] = None) -> str:
        lines = self._banner("BOUNDARY WITNESS")
        lines.extend(self._witness_lines(witness))
        if result is not None:
            lines.append("")
            lines.extend(self._verification_lines(result))
        if obstruction is not None:
            lines.append(f"Planarity obstruction: {self.status(obstruction)}")
        lines.append("=" * WIDTH)
        return "\n".join(lines) + "\n"

    def format_planarity(self, graph: SimplicialGraph, planar: bool,
                         kuratowski: Optional[SubdivisionEmbedding] = None,
                         planar_double: Optional[str] = None, probed: bool = False) -> str:
        lines = self._banner("PLANARITY")
        lines.append(self._graph_line(graph))
        lines.append(f"Planar: {self._paint(str(planar), Fore.GREEN if planar else Fore.RED)}")
        if kuratowski is not None:
            lines.append("Kuratowski subgraph:")
            lines.extend(self._embedding_lines(kuratowski))
        if probed:
            found = f"over '{planar_double}'" if planar_double is not None else "none"
            lines.append(f"Planar single double: {found}")
        lines.append("=" * WIDTH)
        return "\n".join(lines) + "\n"
