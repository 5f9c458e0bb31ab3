"""Reduction engine: K5 conversion, rewrites, doublings and certificates."""

from src.reduction.certificate import (
    TerminalKind,
    ShortenRewrite,
    Double,
    Terminal,
    ReductionStep,
    ReductionCertificate,
    VerificationResult,
    CertificateVerifier,
    verify_certificate,
)
from src.reduction.k5 import K5Conversion, k5_to_k33
from src.reduction.rewrites import find_shortening, improve
from src.reduction.terminals import match_terminal
from src.reduction.engine import ReductionEngine, reduce, reduce_step
from src.reduction.moves import bad_edge_endpoints, endpoint_double, exhaustive_double

__all__ = [
    'TerminalKind',
    'ShortenRewrite',
    'Double',
    'Terminal',
    'ReductionStep',
    'ReductionCertificate',
    'VerificationResult',
    'CertificateVerifier',
    'verify_certificate',
    'K5Conversion',
    'k5_to_k33',
    'find_shortening',
    'improve',
    'match_terminal',
    'ReductionEngine',
    'reduce',
    'reduce_step',
    'bad_edge_endpoints',
    'endpoint_double',
    'exhaustive_double',
]
