"""
Plain-dict forms of certificates, classification reports and witnesses.

Every step of a certificate carries the graph it ran on, so a document can
be checked without re-running the engine. Readers rebuild the objects and
leave the mathematical checks to the verifiers.
"""

import logging
from typing import Dict, Mapping, Optional

from src.classifier.classifier import ClassificationReport
from src.classifier.verdicts import Verdict
from src.config.strategies import RewriteRule
from src.graph.core import SimplicialGraph
from src.predicates.separation import InseparabilityReport
from src.reduction.certificate import (
    Double,
    ReductionCertificate,
    ReductionStep,
    ShortenRewrite,
    Terminal,
    TerminalKind,
)
from src.search.bad_edges import BadEdgeClass, BadEdgeRecord, BadEdgeReport
from src.search.embedding import SubdivisionEmbedding
from src.utils.errors import RacgError, ValidationError
from src.witnesses.model import witness_from_dict

logger = logging.getLogger(__name__)


# ============================================================================
# GRAPHS AND EMBEDDINGS
# ============================================================================

def graph_from_dict(data: Mapping[str, object]) -> SimplicialGraph:
    """
    Raises:
        ValidationError: If the record is not a valid simple graph
    """
    try:
        return SimplicialGraph(data['vertices'], [tuple(e) for e in data['edges']])
    except (KeyError, TypeError, RacgError) as e:
        raise ValidationError(f"Malformed graph record: {e}") from None


def _embedding(data) -> Optional[SubdivisionEmbedding]:
    if data is None:
        return None
    try:
        return SubdivisionEmbedding.from_dict(data)
    except RacgError as e:
        raise ValidationError(str(e)) from None


def _embedding_dict(embedding: Optional[SubdivisionEmbedding]):
    return embedding.to_dict() if embedding is not None else None


# ============================================================================
# REDUCTION CERTIFICATES
# ============================================================================

def action_to_dict(action) -> Dict[str, object]:
    if isinstance(action, Terminal):
        return {'type': 'Terminal', 'kind': action.kind.value}
    if isinstance(action, ShortenRewrite):
        return {'type': 'ShortenRewrite', 'rule': action.rule.value, 'successor': action.successor.to_dict()}
    if isinstance(action, Double):
        return {
            'type': 'Double',
            'vertex': action.vertex,
            'generation': action.generation,
            'rule': action.rule.value,
            'successor': action.successor.to_dict(),
        }
    raise ValidationError(f"Unknown reduction action: {action!r}")


def action_from_dict(data: Mapping[str, object]):
    kind = data.get('type')
    if kind == 'Terminal':
        return Terminal(TerminalKind(data['kind']))
    if kind == 'ShortenRewrite':
        return ShortenRewrite(RewriteRule(data['rule']), _embedding(data['successor']))
    if kind == 'Double':
        return Double(
            vertex=str(data['vertex']),
            generation=int(data['generation']),
            rule=RewriteRule(data['rule']),
            successor=_embedding(data['successor']),
        )
    raise ValidationError(f"Unknown action type: {kind!r}")


def certificate_to_dict(certificate: ReductionCertificate) -> Dict[str, object]:
    return {
        'initial_graph': certificate.initial_graph.to_dict(),
        'steps': [
            {
                'graph': step.graph_before.to_dict(),
                'embedding': step.embedding.to_dict(),
                'report': step.report.to_dict(),
                'action': action_to_dict(step.action),
            }
            for step in certificate.steps
        ],
        'terminal': certificate.terminal.value,
        'terminal_embedding': certificate.terminal_embedding.to_dict(),
        'doubling_sequence': list(certificate.doubling_sequence),
    }


def certificate_from_dict(data: Mapping[str, object]) -> ReductionCertificate:
    """
    Rebuild a certificate. Structure is checked here; soundness is left to
    verify_certificate.

    Raises:
        ValidationError: On missing fields or unknown enum values
    """
    try:
        steps = []
        for raw in data['steps']:
            embedding = _embedding(raw['embedding'])
            records = [
                BadEdgeRecord(r['u'], r['w'], BadEdgeClass(r['class']))
                for r in raw['report']['bad_edges']
            ]
            steps.append(ReductionStep(
                graph_before=graph_from_dict(raw['graph']),
                embedding=embedding,
                report=BadEdgeReport(embedding, records),
                action=action_from_dict(raw['action']),
            ))
        return ReductionCertificate(
            initial_graph=graph_from_dict(data['initial_graph']),
            steps=steps,
            terminal=TerminalKind(data['terminal']),
            terminal_embedding=_embedding(data['terminal_embedding']),
            doubling_sequence=[str(v) for v in data['doubling_sequence']],
        )
    except ValidationError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise ValidationError(f"Malformed reduction certificate: {e!r}") from None


# ============================================================================
# CLASSIFICATION REPORTS
# ============================================================================

def report_to_dict(report: ClassificationReport) -> Dict[str, object]:
    return {
        'graph': report.graph.to_dict(),
        'graph_planar': report.graph_planar,
        'kuratowski': _embedding_dict(report.kuratowski),
        'inseparability': report.inseparability.to_dict(),
        'hyperbolic': report.hyperbolic,
        'isolated_flats': report.isolated_flats,
        'flats_strategy': report.flats_strategy,
        'triangle_free': report.triangle_free,
        'induced_pi': _embedding_dict(report.induced_pi),
        'induced_pi_checked': report.induced_pi_checked,
        'reduction': certificate_to_dict(report.reduction) if report.reduction else None,
        'reduction_verified': report.reduction_verified,
        'reduction_skipped': report.reduction_skipped,
        'planar_double': report.planar_double,
        'witness': report.witness.to_dict() if report.witness is not None else None,
        'verdicts': [v.to_dict() for v in report.verdicts],
        'notes': list(report.notes),
    }


def _separator(value):
    return tuple(value) if value else None


def report_from_dict(data: Mapping[str, object]) -> ClassificationReport:
    """
    Raises:
        ValidationError: On missing fields or malformed nested records
    """
    try:
        insep = data['inseparability']
        return ClassificationReport(
            graph=graph_from_dict(data['graph']),
            graph_planar=bool(data['graph_planar']),
            kuratowski=_embedding(data['kuratowski']),
            inseparability=InseparabilityReport(
                connected=bool(insep['connected']),
                separating_vertex=_separator(insep['separating_vertex']),
                separating_edge=_separator(insep['separating_edge']),
                cut_pair=_separator(insep['cut_pair']),
                separating_vertex_suspension=_separator(insep['separating_vertex_suspension']),
            ),
            hyperbolic=bool(data['hyperbolic']),
            isolated_flats=bool(data['isolated_flats']),
            flats_strategy=str(data['flats_strategy']),
            triangle_free=bool(data.get('triangle_free', True)),
            induced_pi=_embedding(data.get('induced_pi')),
            induced_pi_checked=bool(data.get('induced_pi_checked', False)),
            reduction=certificate_from_dict(data['reduction']) if data.get('reduction') else None,
            reduction_verified=data.get('reduction_verified'),
            reduction_skipped=data.get('reduction_skipped'),
            planar_double=data.get('planar_double'),
            witness=witness_from_dict(data['witness']) if data.get('witness') else None,
            verdicts=[Verdict.from_dict(v) for v in data['verdicts']],
            notes=[str(n) for n in data.get('notes', ())],
        )
    except ValidationError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise ValidationError(f"Malformed classification report: {e!r}") from None
