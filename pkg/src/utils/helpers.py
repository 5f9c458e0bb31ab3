"""
Helper utility functions for the RACG boundary toolkit.
"""

import logging
import time
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from src.config.settings import LOG_FORMAT
from src.utils.errors import DeadlineExceeded

# ============================================================================
# LOGGING SETUP
# ============================================================================

def setup_logging(log_level: str = 'INFO', log_file: Optional[Path] = None):
    """
    Setup logging configuration.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR)
        log_file: Optional log file path
    """
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format=LOG_FORMAT,
        handlers=[
            logging.StreamHandler(),
            *([logging.FileHandler(log_file)] if log_file else [])
        ]
    )

# ============================================================================
# CANONICAL ORDERING
# ============================================================================

def edge_key(u: str, w: str) -> Tuple[str, str]:
    """Unordered edge as a sorted pair."""
    return (u, w) if u <= w else (w, u)


def path_edges(path: Sequence[str]) -> List[Tuple[str, str]]:
    """
    Edges traversed by a vertex sequence, as sorted pairs.

    Args:
        path: Vertex sequence

    Returns:
        List of sorted pairs, in path order
    """
    return [edge_key(path[i], path[i + 1]) for i in range(len(path) - 1)]


def join_paths(*segments: Sequence[str]) -> Tuple[str, ...]:
    """
    Concatenate path segments, merging the shared endpoint of consecutive
    segments and collapsing repeated vertices from degenerate segments.
    """
    joined: List[str] = []
    for segment in segments:
        for vertex in segment:
            if joined and joined[-1] == vertex:
                continue
            joined.append(vertex)
    return tuple(joined)


def segment(path: Sequence[str], start: str, end: str) -> Tuple[str, ...]:
    """Sub-path of path from start to end, in that direction."""
    i, j = path.index(start), path.index(end)
    if i <= j:
        return tuple(path[i:j + 1])
    return tuple(reversed(path[j:i + 1]))


def canonical_cycle(cycle: Sequence[str]) -> Tuple[str, ...]:
    """
    Rotate and reflect a cycle so it starts at its least vertex and its
    second vertex is less than its last.
    """
    if not cycle:
        return ()
    start = min(range(len(cycle)), key=lambda i: cycle[i])
    rotated = list(cycle[start:]) + list(cycle[:start])
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[1:][::-1]
    return tuple(rotated)


# ============================================================================
# DEADLINES
# ============================================================================

class Deadline:
    """
    Cooperative cancellation for long searches.

    Example:
        >>> deadline = Deadline(5.0)
        >>> deadline.check('reduce')   # raises DeadlineExceeded after 5 s
    """

    def __init__(self, seconds: Optional[float] = None):
        self.seconds = seconds
        self._expires = None if seconds is None else time.monotonic() + seconds

    def expired(self) -> bool:
        return self._expires is not None and time.monotonic() > self._expires

    def check(self, where: str = ''):
        if self.expired():
            raise DeadlineExceeded(f"Deadline of {self.seconds}s exceeded during {where or 'search'}")
