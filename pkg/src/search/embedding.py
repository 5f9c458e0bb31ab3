"""
Subdivision embeddings: a pattern drawn in a graph with essential vertices
mapped to graph vertices and each branch mapped to a simple path.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Set, Tuple

from src.graph.core import SimplicialGraph
from src.search.patterns import PatternId, PatternSpec, get_pattern
from src.utils.errors import (
    BranchTooShort,
    InvalidEmbedding,
    NotInduced,
    PatternMismatch,
)
from src.utils.helpers import edge_key, path_edges

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubdivisionEmbedding:
    """
    A subdivided pattern inside a graph.

    Attributes:
        pattern: Which pattern is embedded
        essential_map: Pattern vertex -> graph vertex
        branches: Branch name -> graph path, oriented from the branch's
            start letter to its end letter

    Example:
        >>> emb.branch_between('x', 'a')   # path from image(x) to image(a)
    """
    pattern: PatternId
    essential_map: Dict[str, str]
    branches: Dict[str, Tuple[str, ...]]
    _spec: PatternSpec = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, '_spec', get_pattern(self.pattern))
        object.__setattr__(self, 'branches', {k: tuple(p) for k, p in self.branches.items()})

    @property
    def spec(self) -> PatternSpec:
        return self._spec

    # ------------------------------------------------------------------
    # Derived views
    # ------------------------------------------------------------------

    def image(self, p: str) -> str:
        return self.essential_map[p]

    def role_of(self, vertex: str) -> Optional[str]:
        """Pattern vertex whose image is vertex, or None."""
        for p, v in self.essential_map.items():
            if v == vertex:
                return p
        return None

    @property
    def essential_vertices(self) -> FrozenSet[str]:
        return frozenset(self.essential_map.values())

    @property
    def vertices(self) -> FrozenSet[str]:
        found: Set[str] = set(self.essential_map.values())
        for path in self.branches.values():
            found.update(path)
        return frozenset(found)

    @property
    def edges(self) -> FrozenSet[Tuple[str, str]]:
        found = set()
        for path in self.branches.values():
            found.update(path_edges(path))
        return frozenset(found)

    @property
    def length(self) -> int:
        """Total number of edges over all branches."""
        return sum(len(p) - 1 for p in self.branches.values())

    def branch(self, name: str) -> Tuple[str, ...]:
        return self.branches[name]

    def branch_between(self, p: str, q: str) -> Tuple[str, ...]:
        """Path from image(p) to image(q) for the unique branch joining them."""
        matches = self._spec.branches_between(p, q)
        if len(matches) != 1:
            raise KeyError(f"No unique branch between '{p}' and '{q}'")
        spec = matches[0]
        path = self.branches[spec.name]
        return path if spec.start == p else tuple(reversed(path))

    def interior(self, name: str) -> Tuple[str, ...]:
        return self.branches[name][1:-1]

    def owner(self, vertex: str) -> Optional[str]:
        """Branch name whose interior holds vertex, or None."""
        for name, path in self.branches.items():
            if vertex in path[1:-1]:
                return name
        return None

    @property
    def sides(self) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        """Images of the two K33 sides."""
        one, two = self._spec.sides
        return (
            tuple(self.essential_map[p] for p in one),
            tuple(self.essential_map[p] for p in two),
        )

    def sort_key(self) -> tuple:
        """Tie-break key: sorted essential images, then sorted branch paths."""
        return (
            tuple(sorted(self.essential_map.values())),
            tuple(sorted(self.branches.values())),
        )

    # ------------------------------------------------------------------
    # Transformations
    # ------------------------------------------------------------------

    def relabel(self, roles: Mapping[str, str], pattern: Optional[PatternId] = None) -> 'SubdivisionEmbedding':
        """
        Re-read the same subgraph with permuted roles.

        Args:
            roles: New pattern vertex -> old pattern vertex. Must map the
                branch pairs of the target pattern onto branch pairs of
                this embedding.
            pattern: Target pattern (defaults to this one); lets a K33
                embedding be re-read as Fig5Left or Fig5Right

        Returns:
            New embedding with the same vertex and edge sets
        """
        target = get_pattern(pattern or self.pattern)
        essential_map = {p: self.essential_map[roles[p]] for p in target.essential}
        branches = {
            b.name: self.branch_between(roles[b.start], roles[b.end])
            for b in target.branches
        }
        return SubdivisionEmbedding(target.pattern, essential_map, branches)

    def to_dict(self) -> Dict[str, object]:
        return {
            'pattern': self.pattern.value,
            'essential_map': dict(sorted(self.essential_map.items())),
            'branches': {k: list(v) for k, v in sorted(self.branches.items())},
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> 'SubdivisionEmbedding':
        try:
            return cls(
                pattern=PatternId(data['pattern']),
                essential_map={str(k): str(v) for k, v in data['essential_map'].items()},
                branches={str(k): tuple(str(s) for s in v) for k, v in data['branches'].items()},
            )
        except (KeyError, TypeError, AttributeError, ValueError) as e:
            raise InvalidEmbedding(f"Malformed embedding record: {e}") from e


# ============================================================================
# VALIDATION
# ============================================================================

def embedding_errors(graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                     check_pattern: bool = True) -> List[str]:
    """
    Collect every reason an embedding is not a valid subdivision in graph.

    Args:
        graph: Host graph
        embedding: Embedding to check
        check_pattern: Also enforce forced edges, subdivided branches,
            extra edges and inducedness for the richer patterns

    Returns:
        List of error messages (empty if valid)
    """
    spec = embedding.spec
    errors: List[str] = []

    if set(embedding.essential_map) != set(spec.essential):
        errors.append(
            f"Essential roles {sorted(embedding.essential_map)} do not match "
            f"pattern {spec.pattern.value}"
        )
        return errors
    if set(embedding.branches) != set(spec.branch_names):
        errors.append(f"Branch names {sorted(embedding.branches)} do not match pattern {spec.pattern.value}")
        return errors

    images = list(embedding.essential_map.values())
    for v in images:
        if v not in graph:
            errors.append(f"Essential image '{v}' is not a vertex")
    if len(set(images)) != len(images):
        errors.append("Essential images are not distinct")
    if errors:
        return errors

    essential = set(images)
    seen_interior: Dict[str, str] = {}
    for b in spec.branches:
        path = embedding.branches[b.name]
        if len(path) < 2:
            errors.append(f"Branch {b.name} has fewer than two vertices")
            continue
        if path[0] != embedding.image(b.start) or path[-1] != embedding.image(b.end):
            errors.append(f"Branch {b.name} does not join {b.start} and {b.end}")
        if len(set(path)) != len(path):
            errors.append(f"Branch {b.name} repeats a vertex")
        for u, w in zip(path, path[1:]):
            if u not in graph or w not in graph or not graph.has_edge(u, w):
                errors.append(f"Branch {b.name} uses non-edge {u}-{w}")
        for v in path[1:-1]:
            if v in essential:
                errors.append(f"Branch {b.name} passes through essential vertex '{v}'")
            elif v in seen_interior:
                errors.append(f"Branches {seen_interior[v]} and {b.name} share vertex '{v}'")
            else:
                seen_interior[v] = b.name

    if errors or not check_pattern:
        return errors

    for name in sorted(spec.forced_edges):
        if len(embedding.branches[name]) != 2:
            errors.append(f"Branch {name} must be a single edge")
    for name in sorted(spec.forced_subdivided):
        if len(embedding.branches[name]) < 3:
            errors.append(f"Branch {name} must be subdivided")
    for p, q in spec.extra_edges:
        if not graph.has_edge(embedding.image(p), embedding.image(q)):
            errors.append(f"Extra edge {p}-{q} is missing")
    if spec.induced:
        allowed = set(embedding.edges)
        allowed.update(edge_key(embedding.image(p), embedding.image(q)) for p, q in spec.extra_edges)
        keep = embedding.vertices
        for u, w in graph.edges:
            if u in keep and w in keep and (u, w) not in allowed:
                errors.append(f"Image is not induced: extra edge {u}-{w}")

    return errors


def check_embedding(graph: SimplicialGraph, embedding: SubdivisionEmbedding,
                    check_pattern: bool = True):
    """
    Raise the most specific InvalidEmbedding subclass for the first problem.

    Raises:
        BranchTooShort: A forced-subdivided branch is a single edge
        NotInduced: An induced pattern has a stray edge
        PatternMismatch: Any other mismatch with the pattern
    """
    errors = embedding_errors(graph, embedding, check_pattern)
    if not errors:
        return
    message = "; ".join(errors)
    if any("must be subdivided" in e for e in errors):
        raise BranchTooShort(message)
    if any("not induced" in e for e in errors):
        raise NotInduced(message)
    raise PatternMismatch(message)


def k33_paths(embedding: SubdivisionEmbedding) -> Dict[FrozenSet[str], Tuple[str, ...]]:
    """Branch paths of a K33-based embedding keyed by their endpoint pair."""
    return {
        frozenset((embedding.image(b.start), embedding.image(b.end))): embedding.branches[b.name]
        for b in embedding.spec.branches
    }


def k33_embedding(side_one: Sequence[str], side_two: Sequence[str],
                  paths: Mapping[FrozenSet[str], Sequence[str]]) -> SubdivisionEmbedding:
    """
    K33 embedding from two vertex sides and paths keyed by endpoint pair.

    Sides are sorted and the side holding the least vertex plays a, b, c.

    Raises:
        PatternMismatch: If a side pair has no path
    """
    one, two = sorted(side_one), sorted(side_two)
    if two[0] < one[0]:
        one, two = two, one
    roles = dict(zip('abc', one))
    roles.update(zip('xyz', two))
    branches = {}
    for p, s in zip('abc', one):
        for q, t in zip('xyz', two):
            path = paths.get(frozenset((s, t)))
            if path is None:
                raise PatternMismatch(f"No path joins {s} and {t}")
            path = tuple(path)
            branches[p + q] = path if path[0] == s else tuple(reversed(path))
    return SubdivisionEmbedding(PatternId.K33, roles, branches)


def build_embedding(pattern: PatternId, roles: Mapping[str, str],
                    paths: Mapping[Tuple[str, str], Sequence[str]]) -> SubdivisionEmbedding:
    """
    Assemble an embedding from role images and paths keyed by role pairs.

    Each path is oriented to match its branch; paths given in the opposite
    direction are reversed.
    """
    spec = get_pattern(pattern)
    branches = {}
    for b in spec.branches:
        if (b.start, b.end) in paths:
            branches[b.name] = tuple(paths[(b.start, b.end)])
        elif (b.end, b.start) in paths:
            branches[b.name] = tuple(reversed(paths[(b.end, b.start)]))
        else:
            raise PatternMismatch(f"No path given for branch {b.name}")
    return SubdivisionEmbedding(spec.pattern, dict(roles), branches)
