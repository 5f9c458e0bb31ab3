"""
Isolated-flats criteria for triangle-free defining graphs.
All criteria implement the FlatsCriterion interface so the classifier can
swap them by strategy name.
"""

import logging
from abc import ABC, abstractmethod
from itertools import combinations
from typing import Optional, Tuple, Union

from src.config.strategies import DEFAULT_FLATS_STRATEGY, FlatsStrategy
from src.graph.core import SimplicialGraph, find_triangle
from src.predicates.curvature import find_induced_square
from src.utils.errors import NotTriangleFree


class FlatsCriterion(ABC):
    """
    Abstract base class for isolated-flats predicates.

    Subclasses decide the property and may return a witness for its failure.
    """

    strategy: FlatsStrategy

    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)

    @property
    def label(self) -> str:
        """Strategy label recorded in reports."""
        return self.strategy.value

    def check(self, graph: SimplicialGraph) -> bool:
        """
        Evaluate the criterion.

        Raises:
            NotTriangleFree: If graph has a triangle
        """
        triangle = find_triangle(graph)
        if triangle:
            raise NotTriangleFree(triangle)
        witness = self.obstruction(graph)
        if witness is not None:
            self.logger.debug(f"{self.label}: obstruction {witness}")
        return witness is None

    @abstractmethod
    def obstruction(self, graph: SimplicialGraph) -> Optional[Tuple]:
        """
        Witness that the criterion fails, or None.

        Args:
            graph: Triangle-free graph
        """
        pass


class CapraceK23Criterion(FlatsCriterion):
    """
    No non-adjacent pair with three or more common neighbours, i.e. no
    induced K_{2,3}. In a triangle-free graph two squares sharing a diagonal
    pair are exactly such a configuration.
    """

    strategy = FlatsStrategy.CAPRACE_K23

    def obstruction(self, graph: SimplicialGraph) -> Optional[Tuple]:
        for u, w in combinations(graph.vertices, 2):
            if graph.has_edge(u, w):
                continue
            common = sorted(graph.neighbors(u) & graph.neighbors(w))
            if len(common) >= 3:
                return (u, w, tuple(common[:3]))
        return None


class HyperbolicOnlyCriterion(FlatsCriterion):
    """Only the vacuous case: no squares at all."""

    strategy = FlatsStrategy.HYPERBOLIC_ONLY

    def obstruction(self, graph: SimplicialGraph) -> Optional[Tuple]:
        return find_induced_square(graph)


_CRITERIA = {
    FlatsStrategy.CAPRACE_K23: CapraceK23Criterion,
    FlatsStrategy.HYPERBOLIC_ONLY: HyperbolicOnlyCriterion,
}


def get_flats_criterion(strategy: Union[FlatsStrategy, str, None] = None) -> FlatsCriterion:
    """
    Get the criterion for a strategy.

    Args:
        strategy: FlatsStrategy, its string label, or None for the default

    Returns:
        FlatsCriterion instance

    Raises:
        ValueError: If the strategy is not supported
    """
    if strategy is None:
        strategy = DEFAULT_FLATS_STRATEGY
    if isinstance(strategy, str):
        try:
            strategy = FlatsStrategy(strategy)
        except ValueError:
            raise ValueError(
                f"Unsupported flats strategy '{strategy}'. "
                f"Supported: {[s.value for s in FlatsStrategy]}"
            ) from None
    return _CRITERIA[strategy]()


def has_isolated_flats(graph: SimplicialGraph,
                       strategy: Union[FlatsStrategy, str, None] = None) -> bool:
    """
    Isolated-flats predicate under the chosen strategy.

    Raises:
        NotTriangleFree: If graph has a triangle
    """
    return get_flats_criterion(strategy).check(graph)
