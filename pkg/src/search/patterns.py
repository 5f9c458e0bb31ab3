"""
Pattern graphs searched for as subdivisions.

Each pattern lists its essential vertices, its branches (named by their
end letters), which branches must be single edges or must be subdivided,
the extra edges that must join essential vertices, and the ordering
constraints that pick one representative per pattern automorphism class.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, Optional, Tuple


class PatternId(Enum):
    """Patterns the subdivision search understands"""
    K5 = "K5"
    K33 = "K33"
    THETA = "Theta"
    FIG5_LEFT = "Fig5Left"     # K33 plus x-y, y-z (the graph Pi)
    FIG5_RIGHT = "Fig5Right"   # K33 plus x-y, y-z, a-b, b-c


@dataclass(frozen=True)
class BranchSpec:
    name: str
    start: str
    end: str


@dataclass(frozen=True)
class PatternSpec:
    """
    Static description of a pattern.

    Attributes:
        pattern: Identifier
        essential: Pattern vertices in assignment order
        branches: Branch specs in routing order
        sides: Vertex partition for K33-based patterns
        forced_edges: Branch names that must be a single graph edge
        forced_subdivided: Branch names that need at least one interior vertex
        extra_edges: Essential pairs that must be adjacent in the graph
        induced: Whether the image must be induced apart from extra_edges
        order: Pairs (p, q) requiring image(p) < image(q)
    """
    pattern: PatternId
    essential: Tuple[str, ...]
    branches: Tuple[BranchSpec, ...]
    sides: Optional[Tuple[Tuple[str, ...], Tuple[str, ...]]] = None
    forced_edges: FrozenSet[str] = frozenset()
    forced_subdivided: FrozenSet[str] = frozenset()
    extra_edges: Tuple[Tuple[str, str], ...] = ()
    induced: bool = False
    order: Tuple[Tuple[str, str], ...] = ()
    _valence: Dict[str, int] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        valence = {p: 0 for p in self.essential}
        for branch in self.branches:
            valence[branch.start] += 1
            valence[branch.end] += 1
        object.__setattr__(self, '_valence', valence)

    @property
    def branch_names(self) -> Tuple[str, ...]:
        return tuple(b.name for b in self.branches)

    def branch(self, name: str) -> BranchSpec:
        for b in self.branches:
            if b.name == name:
                return b
        raise KeyError(f"Pattern {self.pattern.value} has no branch '{name}'")

    def valence(self, p: str) -> int:
        """Valence of a pattern vertex inside the subdivision."""
        return self._valence[p]

    def required_degree(self, p: str) -> int:
        """Least graph degree an image of p can have."""
        extras = sum(1 for e in self.extra_edges if p in e)
        return self.valence(p) + extras

    def branches_between(self, p: str, q: str) -> Tuple[BranchSpec, ...]:
        return tuple(
            b for b in self.branches
            if {b.start, b.end} == {p, q}
        )

    def side_of(self, p: str) -> int:
        if self.sides is None:
            raise ValueError(f"Pattern {self.pattern.value} has no sides")
        return 0 if p in self.sides[0] else 1


# ============================================================================
# PATTERN DEFINITIONS
# ============================================================================

SIDE_ONE = ('a', 'b', 'c')
SIDE_TWO = ('x', 'y', 'z')


def _k33_branches() -> Tuple[BranchSpec, ...]:
    return tuple(BranchSpec(s + t, s, t) for s in SIDE_ONE for t in SIDE_TWO)


def k33_branch_name(p: str, q: str) -> str:
    """Branch name for the K33 pair {p, q}, side-one letter first."""
    return p + q if p in SIDE_ONE else q + p


_K5_VERTICES = ('a', 'b', 'c', 'd', 'e')

PATTERNS: Dict[PatternId, PatternSpec] = {
    PatternId.K5: PatternSpec(
        pattern=PatternId.K5,
        essential=_K5_VERTICES,
        branches=tuple(BranchSpec(p + q, p, q) for p, q in combinations(_K5_VERTICES, 2)),
        order=tuple(zip(_K5_VERTICES, _K5_VERTICES[1:])),
    ),
    PatternId.K33: PatternSpec(
        pattern=PatternId.K33,
        essential=SIDE_ONE + SIDE_TWO,
        branches=_k33_branches(),
        sides=(SIDE_ONE, SIDE_TWO),
        order=(('a', 'b'), ('b', 'c'), ('x', 'y'), ('y', 'z'), ('a', 'x')),
    ),
    PatternId.THETA: PatternSpec(
        pattern=PatternId.THETA,
        essential=('a', 'b'),
        branches=tuple(BranchSpec(f"ab{i}", 'a', 'b') for i in (1, 2, 3)),
        order=(('a', 'b'),),
    ),
    PatternId.FIG5_LEFT: PatternSpec(
        pattern=PatternId.FIG5_LEFT,
        essential=SIDE_ONE + SIDE_TWO,
        branches=_k33_branches(),
        sides=(SIDE_ONE, SIDE_TWO),
        extra_edges=(('x', 'y'), ('y', 'z')),
        induced=True,
        order=(('a', 'b'), ('b', 'c'), ('x', 'z')),
    ),
    PatternId.FIG5_RIGHT: PatternSpec(
        pattern=PatternId.FIG5_RIGHT,
        essential=SIDE_ONE + SIDE_TWO,
        branches=_k33_branches(),
        sides=(SIDE_ONE, SIDE_TWO),
        forced_edges=frozenset({'ay', 'cy', 'bx', 'bz'}),
        forced_subdivided=frozenset({'ax', 'az', 'by', 'cx', 'cz'}),
        extra_edges=(('x', 'y'), ('y', 'z'), ('a', 'b'), ('b', 'c')),
        induced=True,
        order=(('a', 'c'), ('x', 'z'), ('b', 'y')),
    ),
}


def get_pattern(pattern) -> PatternSpec:
    """
    Look up a pattern by id or by its string value.

    Raises:
        ValueError: If the pattern is unknown
    """
    if isinstance(pattern, str):
        try:
            pattern = PatternId(pattern)
        except ValueError:
            raise ValueError(
                f"Unknown pattern '{pattern}'. Supported: {[p.value for p in PatternId]}"
            ) from None
    return PATTERNS[pattern]
