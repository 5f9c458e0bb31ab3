"""Graph predicates standing for group properties."""

from src.predicates.separation import InseparabilityReport, is_inseparable, separates
from src.predicates.curvature import find_induced_square, induced_squares, is_hyperbolic_racg
from src.predicates.flats import (
    FlatsCriterion,
    CapraceK23Criterion,
    HyperbolicOnlyCriterion,
    get_flats_criterion,
    has_isolated_flats,
)

__all__ = [
    'InseparabilityReport',
    'is_inseparable',
    'separates',
    'find_induced_square',
    'induced_squares',
    'is_hyperbolic_racg',
    'FlatsCriterion',
    'CapraceK23Criterion',
    'HyperbolicOnlyCriterion',
    'get_flats_criterion',
    'has_isolated_flats',
]
