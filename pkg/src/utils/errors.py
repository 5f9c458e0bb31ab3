"""
Exception hierarchy for the RACG boundary toolkit.

Input problems derive from ValueError so callers that already guard
against bad input keep working.
"""

from typing import Optional


class RacgError(ValueError):
    """Base class for every error raised by the toolkit."""


# ============================================================================
# GRAPH ERRORS
# ============================================================================

class UnknownVertex(RacgError):
    """A vertex label that is not in the graph."""

    def __init__(self, vertex: str, context: str = ''):
        self.vertex = vertex
        where = f" ({context})" if context else ''
        super().__init__(f"Unknown vertex '{vertex}'{where}")


class InvalidGraph(RacgError):
    """Malformed graph data. Carries an optional source position."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column or 1}: {message}"
        super().__init__(message)


class SelfLoop(InvalidGraph):
    pass


class DuplicateEdge(InvalidGraph):
    pass


class NotTriangleFree(RacgError):
    """Raised when an operation needs a triangle-free defining graph."""

    def __init__(self, triangle: tuple):
        self.triangle = tuple(triangle)
        super().__init__(f"Graph contains the triangle {'-'.join(self.triangle)}")


class PlanarInput(RacgError):
    pass


class GraphTooLarge(RacgError):
    """Search budget exceeded. Never silently approximated."""

    def __init__(self, size: int, budget: int):
        self.size = size
        self.budget = budget
        super().__init__(f"Graph has {size} vertices, search budget is {budget}")


class DeadlineExceeded(RacgError):
    pass


# ============================================================================
# EMBEDDING ERRORS
# ============================================================================

class InvalidEmbedding(RacgError):
    pass


class NotInduced(InvalidEmbedding):
    pass


class NoK5(InvalidEmbedding):
    pass


class PatternMismatch(InvalidEmbedding):
    pass


class BranchTooShort(InvalidEmbedding):
    pass


class InternalInvariantViolation(RacgError, RuntimeError):
    """A state the reduction argument rules out was reached."""


class ReductionStalled(RacgError):
    """
    No move lowers the bad-edge count of the canonical K33 embedding.

    Raised after every construction and, when enabled, the search over all
    doubles has failed. Carries the stuck state and the steps taken so far.
    """

    def __init__(self, graph, embedding, report, steps=None):
        self.graph = graph
        self.embedding = embedding
        self.report = report
        self.steps = list(steps or [])
        super().__init__(
            f"Reduction stalled at B = {report.count} on a graph with {len(graph)} vertices: "
            f"no double contains a K33 subdivision with fewer bad edges"
        )


# ============================================================================
# I/O ERRORS
# ============================================================================

class ParseError(InvalidGraph):
    pass


class BadParams(RacgError):
    pass


class ValidationError(RacgError):
    pass


class SchemaVersionMismatch(ValidationError):
    pass
