"""Main src package initialization."""

__version__ = '0.1.0'
__author__ = 'RACG Boundary Toolkit Team'

# Make key entry points easily importable
from src.graph import SimplicialGraph, double
from src.search import find_subdivision, is_planar
from src.reduction import reduce, verify_certificate
from src.predicates import is_inseparable, is_hyperbolic_racg, has_isolated_flats
from src.classifier import classify, BoundaryClassifier
from src.witnesses import verify_witness, obstruction_check
from src.io import parse_graph, load_graph, generate, emit_document, parse_document
from src.reporting import ReportFormatter

__all__ = [
    'SimplicialGraph',
    'double',
    'find_subdivision',
    'is_planar',
    'reduce',
    'verify_certificate',
    'is_inseparable',
    'is_hyperbolic_racg',
    'has_isolated_flats',
    'classify',
    'BoundaryClassifier',
    'verify_witness',
    'obstruction_check',
    'parse_graph',
    'load_graph',
    'generate',
    'emit_document',
    'parse_document',
    'ReportFormatter',
]
