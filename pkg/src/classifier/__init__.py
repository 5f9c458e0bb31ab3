"""Boundary classifier package."""

from src.classifier.verdicts import Verdict, VerdictKind
from src.classifier.classifier import BoundaryClassifier, ClassificationReport, classify

__all__ = [
    'Verdict',
    'VerdictKind',
    'BoundaryClassifier',
    'ClassificationReport',
    'classify',
]
