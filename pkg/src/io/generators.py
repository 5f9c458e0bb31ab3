"""
Named graph families.

Subdivision families label essential vertices by their pattern role
(a, b, c / x, y, z, or a..e for K5) and branch interiors by branch name
plus position, so "ax1" is the first interior vertex of branch [a, x].
"""

import logging
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from src.config.settings import GENERATOR_FAMILIES
from src.graph.core import SimplicialGraph, find_triangle
from src.search.embedding import SubdivisionEmbedding
from src.search.patterns import PatternId, get_pattern
from src.utils.errors import BadParams

logger = logging.getLogger(__name__)

BranchCounts = Union[int, Mapping[str, int]]

# Fig5Right branches that carry a subdivision; the rest are single edges
FIG5_RIGHT_BLACK = ('ax', 'az', 'by', 'cx', 'cz')


def _interior(name: str, count: int) -> Tuple[str, ...]:
    return tuple(f"{name}{i}" for i in range(1, count + 1))


class GraphGenerator:
    """
    Builds members of the supported graph families.

    Subdivision families also return the embedding that places the pattern
    on its own labels (see build()).

    Example:
        >>> GraphGenerator().generate('mobius', n=4)
        SimplicialGraph(|V|=8, |E|=12)
    """

    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)

    def generate(self, family: str, **params) -> SimplicialGraph:
        return self.build(family, **params)[0]

    def build(self, family: str, **params) -> Tuple[SimplicialGraph, Optional[SubdivisionEmbedding]]:
        """
        Build a family member.

        Args:
            family: One of GENERATOR_FAMILIES
            **params: Family parameters (n, branches, lengths)

        Returns:
            (graph, embedding) where embedding is None for families that are
            not subdivisions of a pattern

        Raises:
            BadParams: Unknown family, bad parameter, or a triangle-creating
                subdivision of pi / fig5_right
        """
        if family not in GENERATOR_FAMILIES:
            raise BadParams(f"Unknown family: {family}. Supported families: {GENERATOR_FAMILIES}")
        try:
            graph, embedding = getattr(self, f"_{family}")(**params)
        except TypeError as e:
            raise BadParams(f"Bad parameters for {family}: {e}") from None
        self.logger.debug(f"Generated {family}{params}: {graph!r}")
        return graph, embedding

    # ------------------------------------------------------------------
    # Plain families
    # ------------------------------------------------------------------

    def _cycle(self, n: int):
        n = self._count('n', n, minimum=3)
        labels = [f"v{i}" for i in range(n)]
        return SimplicialGraph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)]), None

    def _path(self, n: int):
        n = self._count('n', n, minimum=2)
        labels = [f"v{i}" for i in range(n)]
        return SimplicialGraph(labels, list(zip(labels, labels[1:]))), None

    def _mobius(self, n: int):
        """2n-cycle plus the n rungs v_i - v_{i+n}."""
        n = self._count('n', n, minimum=3)
        labels = [f"v{i}" for i in range(2 * n)]
        rim = [(labels[i], labels[(i + 1) % (2 * n)]) for i in range(2 * n)]
        rungs = [(labels[i], labels[i + n]) for i in range(n)]
        return SimplicialGraph(labels, rim + rungs), None

    def _petersen(self):
        graph = nx.relabel_nodes(nx.petersen_graph(), {i: f"p{i}" for i in range(10)})
        return SimplicialGraph.from_networkx(graph), None

    def _theta(self, lengths: Sequence[int] = (2, 2, 3)):
        """Two poles a, b joined by three paths with the given edge counts."""
        lengths = list(lengths)
        if len(lengths) != 3:
            raise BadParams(f"theta needs three branch lengths, got {lengths}")
        counts = [self._count('length', k, minimum=1) for k in lengths]
        if counts.count(1) > 1:
            raise BadParams("At most one theta branch can be a single edge")
        branches = {
            f"ab{i}": ('a',) + _interior(f"ab{i}_", k - 1) + ('b',)
            for i, k in enumerate(counts, start=1)
        }
        return self._assemble(PatternId.THETA, {'a': 'a', 'b': 'b'}, branches)

    # ------------------------------------------------------------------
    # Subdivided patterns
    # ------------------------------------------------------------------

    def _k33_subdiv(self, branches: BranchCounts = 0):
        return self._subdivide(PatternId.K33, branches, default=0)

    def _k5_subdiv(self, branches: BranchCounts = 0):
        return self._subdivide(PatternId.K5, branches, default=0)

    def _pi(self, branches: BranchCounts = 1):
        """K33 plus x-y and y-z; any branch may be subdivided."""
        return self._subdivide(PatternId.FIG5_LEFT, branches, default=1, refuse_triangles=True)

    def _fig5_right(self, branches: BranchCounts = 1):
        """K33 plus x-y, y-z, a-b, b-c with ay, cy, bx, bz single edges."""
        if isinstance(branches, Mapping):
            fixed = sorted(set(branches) - set(FIG5_RIGHT_BLACK))
            if fixed:
                raise BadParams(f"fig5_right branches {fixed} are single edges; subdivide only {FIG5_RIGHT_BLACK}")
        else:
            branches = {name: branches for name in FIG5_RIGHT_BLACK}
        return self._subdivide(PatternId.FIG5_RIGHT, branches, default=1, refuse_triangles=True)

    def _subdivide(self, pattern: PatternId, branches: BranchCounts, default: int,
                   refuse_triangles: bool = False):
        spec = get_pattern(pattern)
        counts = self._branch_counts(spec.branch_names, branches, default)
        for name in spec.forced_edges:
            counts[name] = 0
        for name in spec.forced_subdivided:
            if counts[name] < 1:
                raise BadParams(f"Branch {name} of {pattern.value} must be subdivided")

        paths = {
            b.name: (b.start,) + _interior(b.name, counts[b.name]) + (b.end,)
            for b in spec.branches
        }
        graph, embedding = self._assemble(pattern, {p: p for p in spec.essential}, paths, spec.extra_edges)
        if refuse_triangles:
            triangle = find_triangle(graph)
            if triangle:
                raise BadParams(
                    f"Branch counts {counts} create the triangle {'-'.join(triangle)} in {pattern.value}"
                )
        return graph, embedding

    def _assemble(self, pattern: PatternId, roles: Dict[str, str], paths: Dict[str, Tuple[str, ...]],
                  extra_edges: Sequence[Tuple[str, str]] = ()):
        edges = [e for path in paths.values() for e in zip(path, path[1:])]
        edges.extend(extra_edges)
        graph = SimplicialGraph.from_edges(edges)
        return graph, SubdivisionEmbedding(pattern, roles, paths)

    # ------------------------------------------------------------------
    # Parameter checks
    # ------------------------------------------------------------------

    @staticmethod
    def _count(name: str, value, minimum: int) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise BadParams(f"{name} must be an integer, got {value!r}")
        if value < minimum:
            raise BadParams(f"{name} must be at least {minimum}, got {value}")
        return value

    def _branch_counts(self, names: Sequence[str], branches: BranchCounts, default: int) -> Dict[str, int]:
        if isinstance(branches, Mapping):
            unknown = sorted(set(branches) - set(names))
            if unknown:
                raise BadParams(f"Unknown branches {unknown}; expected some of {list(names)}")
            counts = {name: default for name in names}
            counts.update({k: self._count(k, v, minimum=0) for k, v in branches.items()})
            return counts
        count = self._count('branches', branches, minimum=0)
        return {name: count for name in names}


# ============================================================================
# CONVENIENCE FUNCTIONS
# ============================================================================

def generate(family: str, **params) -> SimplicialGraph:
    """
    Example:
        >>> pi1 = generate('pi', branches=1)
        >>> len(pi1), len(pi1.edges)
        (15, 20)
    """
    return GraphGenerator().generate(family, **params)


def generate_with_embedding(family: str, **params) -> Tuple[SimplicialGraph, Optional[SubdivisionEmbedding]]:
    return GraphGenerator().build(family, **params)
