"""
Reduction certificates and their independent checker.

A certificate lists every step of a reduction with the graph it ran on, so
a verifier can replay the doublings and re-validate each embedding without
trusting the engine that produced it.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Union

from src.config.strategies import RewriteRule, SHORTEN_RULES
from src.graph.core import SimplicialGraph, find_triangle
from src.graph.doubling import double
from src.search.bad_edges import BadEdgeReport, count_bad_edges
from src.search.embedding import SubdivisionEmbedding, embedding_errors
from src.search.patterns import PatternId
from src.utils.errors import RacgError

logger = logging.getLogger(__name__)


class TerminalKind(Enum):
    """Ways a reduction can end"""
    INDUCED_K33 = "InducedK33"
    FIG5_LEFT = "Fig5Left"
    FIG5_RIGHT = "Fig5Right"


TERMINAL_PATTERNS = {
    TerminalKind.INDUCED_K33: PatternId.K33,
    TerminalKind.FIG5_LEFT: PatternId.FIG5_LEFT,
    TerminalKind.FIG5_RIGHT: PatternId.FIG5_RIGHT,
}


# ============================================================================
# STEP ACTIONS
# ============================================================================

@dataclass(frozen=True)
class ShortenRewrite:
    """Move to another embedding in the same graph."""
    rule: RewriteRule
    successor: SubdivisionEmbedding


@dataclass(frozen=True)
class Double:
    """Move to the double over vertex, with an embedding already built there."""
    vertex: str
    generation: int
    rule: RewriteRule
    successor: SubdivisionEmbedding


@dataclass(frozen=True)
class Terminal:
    kind: TerminalKind


Action = Union[ShortenRewrite, Double, Terminal]


@dataclass
class ReductionStep:
    graph_before: SimplicialGraph
    embedding: SubdivisionEmbedding
    report: BadEdgeReport
    action: Action

    @property
    def bad(self) -> int:
        return self.report.count

    def graph_after(self) -> SimplicialGraph:
        if isinstance(self.action, Double):
            return double(self.graph_before, self.action.vertex, self.action.generation).graph
        return self.graph_before


@dataclass
class ReductionCertificate:
    """
    Full record of a reduction.

    Attributes:
        initial_graph: Input graph
        steps: Steps in order; the last one is Terminal
        terminal: How the reduction ended
        terminal_embedding: Embedding of the terminal pattern in the final graph
        doubling_sequence: Vertices doubled over, in order
    """
    initial_graph: SimplicialGraph
    steps: List[ReductionStep]
    terminal: TerminalKind
    terminal_embedding: SubdivisionEmbedding
    doubling_sequence: List[str] = field(default_factory=list)

    @property
    def final_graph(self) -> SimplicialGraph:
        return self.steps[-1].graph_before if self.steps else self.initial_graph

    @property
    def doublings(self) -> int:
        return len(self.doubling_sequence)

    @property
    def initial_bad(self) -> Optional[int]:
        """B of the first K33 embedding."""
        for step in self.steps:
            if step.embedding.pattern is PatternId.K33:
                return step.bad
        return None


@dataclass
class VerificationResult:
    ok: bool
    diagnostics: List[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


# ============================================================================
# VERIFIER
# ============================================================================

class CertificateVerifier:
    """
    Re-checks every certificate invariant from scratch.

    Example:
        >>> result = CertificateVerifier().verify(certificate)
        >>> result.ok, result.diagnostics[:1]
    """

    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)

    def verify(self, certificate: ReductionCertificate) -> VerificationResult:
        """
        Verify a certificate. Never raises on malformed input.

        Returns:
            VerificationResult; diagnostics are in check order
        """
        try:
            diagnostics = self._check_structure(certificate)
            if not diagnostics:
                for index, step in enumerate(certificate.steps):
                    following = certificate.steps[index + 1] if index + 1 < len(certificate.steps) else None
                    diagnostics.extend(self._check_step(index, step, following))
                diagnostics.extend(self._check_terminal(certificate))
                diagnostics.extend(self._check_doublings(certificate))
        except (RacgError, KeyError, ValueError, TypeError, AttributeError) as e:
            diagnostics = [f"malformed certificate: {e}"]

        if diagnostics:
            self.logger.error(f"Certificate rejected: {diagnostics[0]}")
        return VerificationResult(ok=not diagnostics, diagnostics=diagnostics)

    def _check_structure(self, certificate: ReductionCertificate) -> List[str]:
        errors = []
        if not certificate.steps:
            return ["certificate has no steps"]
        if certificate.steps[0].graph_before != certificate.initial_graph:
            errors.append("first step does not start from the initial graph")
        for index, step in enumerate(certificate.steps):
            last = index == len(certificate.steps) - 1
            if isinstance(step.action, Terminal) != last:
                errors.append(f"step {index}: Terminal must be exactly the last action")
        final = certificate.steps[-1].action
        if isinstance(final, Terminal) and final.kind is not certificate.terminal:
            errors.append(f"terminal {certificate.terminal.value} disagrees with last step {final.kind.value}")
        return errors

    def _check_step(self, index: int, step: ReductionStep,
                    following: Optional[ReductionStep]) -> List[str]:
        errors = []
        graph = step.graph_before
        where = f"step {index}"

        triangle = find_triangle(graph)
        if triangle:
            errors.append(f"{where}: graph has triangle {'-'.join(triangle)}")

        pattern = step.embedding.pattern
        if pattern not in (PatternId.K33, PatternId.K5) or (pattern is PatternId.K5 and index != 0):
            errors.append(f"{where}: unexpected {pattern.value} embedding")
        invalid = embedding_errors(graph, step.embedding, check_pattern=False)
        if invalid:
            return errors + [f"{where}: invalid embedding: {invalid[0]}"]

        bad = count_bad_edges(graph, step.embedding)
        if bad != step.report.count:
            errors.append(f"{where}: bad-edge report mismatch ({step.report.count} claimed, {bad} found)")
        is_k5 = pattern is PatternId.K5
        action = step.action

        if isinstance(action, ShortenRewrite):
            if embedding_errors(graph, action.successor, check_pattern=False):
                errors.append(f"{where}: {action.rule.value} successor is invalid")
            elif not is_k5:
                before = (bad, step.embedding.length)
                after = (count_bad_edges(graph, action.successor), action.successor.length)
                if action.rule not in SHORTEN_RULES:
                    errors.append(f"{where}: {action.rule.value} is not a shortening rule")
                if not after < before:
                    errors.append(f"{where}: rewrite does not decrease (B, length): {before} -> {after}")
            if following is not None and following.graph_before != graph:
                errors.append(f"{where}: graph changed without a doubling")

        elif isinstance(action, Double):
            replay = double(graph, action.vertex, action.generation).graph
            if following is None or following.graph_before != replay:
                errors.append(f"{where}: double replay mismatch over '{action.vertex}'")
            if embedding_errors(replay, action.successor, check_pattern=False):
                errors.append(f"{where}: successor is invalid in the double")
            elif not is_k5:
                after = count_bad_edges(replay, action.successor)
                if after >= bad:
                    errors.append(f"{where}: B does not decrease across the double ({bad} -> {after})")
            if (not is_k5 and following is not None and following.graph_before == replay
                    and not embedding_errors(replay, following.embedding, check_pattern=False)
                    and count_bad_edges(replay, following.embedding) >= bad):
                errors.append(f"{where}: next embedding does not have fewer bad edges")

        return errors

    def _check_terminal(self, certificate: ReductionCertificate) -> List[str]:
        graph = certificate.final_graph
        embedding = certificate.terminal_embedding
        expected = TERMINAL_PATTERNS[certificate.terminal]
        if embedding.pattern is not expected:
            return [f"terminal embedding is {embedding.pattern.value}, expected {expected.value}"]

        errors = embedding_errors(graph, embedding, check_pattern=True)
        if errors:
            if any("not induced" in e for e in errors):
                return [f"terminal not induced: {errors[0]}"]
            return [f"terminal pattern mismatch: {errors[0]}"]
        if certificate.terminal is TerminalKind.INDUCED_K33 and count_bad_edges(graph, embedding):
            return [f"terminal not induced: {count_bad_edges(graph, embedding)} bad edges"]
        return []

    def _check_doublings(self, certificate: ReductionCertificate) -> List[str]:
        errors = []
        doubles = [s.action for s in certificate.steps if isinstance(s.action, Double)]
        if [d.vertex for d in doubles] != list(certificate.doubling_sequence):
            errors.append("doubling sequence disagrees with the Double steps")

        graph = certificate.initial_graph
        for action in doubles:
            graph = double(graph, action.vertex, action.generation).graph
        if graph != certificate.final_graph:
            errors.append("double replay mismatch: doubling sequence does not reproduce the final graph")

        initial_bad = certificate.initial_bad
        if initial_bad is not None and len(doubles) > initial_bad + 1:
            errors.append(f"{len(doubles)} doublings exceed B0 + 1 = {initial_bad + 1}")
        return errors


def verify_certificate(certificate: ReductionCertificate) -> VerificationResult:
    """Convenience wrapper around CertificateVerifier."""
    return CertificateVerifier().verify(certificate)
