"""
Builders for symbolic boundary witnesses.

Each builder reads cycles off a pattern embedding, turns the limit points
of non-commuting generator pairs into formal points, and splits the limit
circles of those cycles into arcs. Only combinatorial data is produced.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.graph.core import SimplicialGraph, is_induced_cycle
from src.search.bad_edges import count_bad_edges
from src.search.embedding import SubdivisionEmbedding, check_embedding, embedding_errors
from src.search.patterns import SIDE_ONE, SIDE_TWO, PatternId
from src.utils.errors import (
    BranchTooShort,
    InvalidEmbedding,
    NotInduced,
    PatternMismatch,
)
from src.utils.helpers import join_paths
from src.witnesses.model import (
    Involution,
    JoinOfCantorSets,
    SymbolicWitness,
    WitnessArc,
    WitnessCircle,
    WitnessType,
)
from src.witnesses.points import FormalBoundaryPoint

logger = logging.getLogger(__name__)

Point = FormalBoundaryPoint


def _rotated(cycle: Tuple[str, ...], start: str) -> Tuple[str, ...]:
    i = cycle.index(start)
    return cycle[i:] + cycle[:i]


def theta_from_k33(embedding: SubdivisionEmbedding) -> SubdivisionEmbedding:
    """Theta subdivision on a and b of a K33 embedding, through x, y and z."""
    branches = {
        f"ab{i}": join_paths(embedding.branch_between('a', t), embedding.branch_between(t, 'b'))
        for i, t in enumerate(SIDE_TWO, start=1)
    }
    return SubdivisionEmbedding(
        PatternId.THETA,
        {'a': embedding.image('a'), 'b': embedding.image('b')},
        branches,
    )


class WitnessBuilder:
    """
    Builds witnesses over one graph.

    Example:
        >>> builder = WitnessBuilder(graph)
        >>> witness = builder.pi(terminal_embedding)
    """

    def __init__(self, graph: SimplicialGraph):
        self.graph = graph
        self.logger = logging.getLogger(self.__class__.__name__)

    # ------------------------------------------------------------------
    # Shared pieces
    # ------------------------------------------------------------------

    def _require(self, embedding: SubdivisionEmbedding, pattern: PatternId):
        if embedding.pattern is not pattern:
            raise InvalidEmbedding(
                f"Expected a {pattern.value} embedding, got {embedding.pattern.value}"
            )
        errors = embedding_errors(self.graph, embedding, check_pattern=False)
        if errors:
            raise InvalidEmbedding("; ".join(errors))

    def _walk(self, embedding: SubdivisionEmbedding, roles: Sequence[str]) -> Tuple[str, ...]:
        """Closed walk through the roles along branches or pattern edges."""
        walk: Tuple[str, ...] = ()
        for p, q in zip(roles, tuple(roles[1:]) + (roles[0],)):
            try:
                leg = embedding.branch_between(p, q)
            except KeyError:
                u, w = embedding.image(p), embedding.image(q)
                if not self.graph.has_edge(u, w):
                    raise PatternMismatch(f"No branch or edge joins '{p}' and '{q}'") from None
                leg = (u, w)
            walk = join_paths(walk, leg)
        return walk[:-1]

    def _cycle(self, name: str, cycle: Tuple[str, ...]) -> Tuple[str, ...]:
        if len(cycle) < 4:
            raise PatternMismatch(f"Cycle {name} has length {len(cycle)}; a limit circle needs 4")
        if not is_induced_cycle(self.graph, cycle):
            raise NotInduced(f"Cycle {name} {'-'.join(cycle)} is not induced")
        return cycle

    @staticmethod
    def _circle_arcs(name: str, cycle: Tuple[str, ...], points: Sequence[Point],
                     keep: Optional[Iterable[Tuple[str, str]]] = None) -> List[WitnessArc]:
        """Arcs between cyclically consecutive points, optionally only some."""
        arcs = []
        wanted = set(keep) if keep is not None else None
        for i, start in enumerate(points):
            end = points[(i + 1) % len(points)]
            pair = (start.label, end.label)
            if wanted is not None and pair not in wanted and pair[::-1] not in wanted:
                continue
            arcs.append(WitnessArc(f"{name}.{i + 1}", start.label, end.label, cycle, name))
        return arcs

    # ------------------------------------------------------------------
    # Theta
    # ------------------------------------------------------------------

    def theta(self, embedding: SubdivisionEmbedding) -> SymbolicWitness:
        """
        Theta graph in the boundary of a Theta subdivision: one limit circle
        split at (ab)^inf and (ba)^inf, plus an arc of a second circle.

        Raises:
            InvalidEmbedding: If embedding is not a valid Theta subdivision
            BranchTooShort: If a branch has length 1 or none has length 3
            NotInduced: If a cycle through two branches has a chord
        """
        self._require(embedding, PatternId.THETA)
        paths = [embedding.branch(name) for name in ('ab1', 'ab2', 'ab3')]
        lengths = [len(p) - 1 for p in paths]
        if min(lengths) < 2 or max(lengths) < 3:
            raise BranchTooShort(
                f"Theta branch lengths {lengths}: need all >= 2 and one >= 3"
            )

        # the longest branch plays the subdivided half-branch pair
        first, second, third = sorted(paths, key=lambda p: (-len(p), p))
        d2 = self._cycle('D2', join_paths(first, tuple(reversed(second)))[:-1])
        d3 = self._cycle('D3', join_paths(first, tuple(reversed(third)))[:-1])

        a, b = embedding.image('a'), embedding.image('b')
        ab, ba = Point(a, b), Point(b, a)
        arcs = self._circle_arcs('X2', d2, [ab, ba])
        arcs.append(WitnessArc('Z', ab.label, ba.label, d3))

        self.logger.debug(f"Theta witness on {a}, {b} with branch lengths {lengths}")
        return SymbolicWitness(
            claimed_type=WitnessType.THETA,
            points=[ab, ba],
            arcs=arcs,
            circles=[WitnessCircle('X2', d2, (ab.label, ba.label))],
        )

    # ------------------------------------------------------------------
    # K33
    # ------------------------------------------------------------------

    def k33(self, embedding: SubdivisionEmbedding) -> Union[SymbolicWitness, JoinOfCantorSets]:
        """
        K33 in the boundary of an induced K33 subdivision.

        Returns:
            SymbolicWitness, or JoinOfCantorSets for an unsubdivided K33

        Raises:
            InvalidEmbedding: If embedding is not a valid K33 subdivision
            NotInduced: If the image has bad edges
        """
        self._require(embedding, PatternId.K33)
        bad = count_bad_edges(self.graph, embedding)
        if bad:
            raise NotInduced(f"K33 embedding has {bad} bad edges")

        subdivided = [name for name in sorted(embedding.branches) if len(embedding.branch(name)) > 2]
        if not subdivided:
            one, two = embedding.sides
            return JoinOfCantorSets(tuple(sorted(one)), tuple(sorted(two)))

        # rename roles so that branch a-x is subdivided
        s, t = subdivided[0][0], subdivided[0][1]
        ones = (s,) + tuple(p for p in SIDE_ONE if p != s)
        twos = (t,) + tuple(q for q in SIDE_TWO if q != t)
        a, b, c = ones
        x, y, z = twos
        img = embedding.image

        d2 = self._cycle('D2', self._walk(embedding, (a, x, b, y)))
        d3 = self._cycle('D3', self._walk(embedding, (a, x, b, z)))
        d2c = self._cycle("D2'", self._walk(embedding, (a, x, c, y)))
        d3c = self._cycle("D3'", self._walk(embedding, (a, x, c, z)))

        ab, ba = Point(img(a), img(b)), Point(img(b), img(a))
        xy, yx = Point(img(x), img(y)), Point(img(y), img(x))
        zx, ca = Point(img(z), img(x)), Point(img(c), img(a))

        arcs = self._circle_arcs('X2', d2, [ab, xy, ba, yx])
        arcs += [
            WitnessArc('Z.1', ab.label, zx.label, d3),
            WitnessArc('Z.2', zx.label, ba.label, d3),
            WitnessArc('A.1', xy.label, ca.label, d2c),
            WitnessArc('A.2', ca.label, yx.label, d2c),
            WitnessArc('B', ca.label, zx.label, d3c),
        ]
        self.logger.debug(f"K33 witness with subdivided branch {img(a)}-{img(x)}")
        return SymbolicWitness(
            claimed_type=WitnessType.K33,
            points=[ab, ba, ca, xy, yx, zx],
            arcs=arcs,
            circles=[WitnessCircle('X2', d2, (ab.label, xy.label, ba.label, yx.label))],
        )

    # ------------------------------------------------------------------
    # K33 with both sides carrying a two-edge path
    # ------------------------------------------------------------------

    def fig5_right(self, embedding: SubdivisionEmbedding) -> SymbolicWitness:
        """
        K33 inside the union of four limit circles.

        Raises:
            PatternMismatch: If embedding does not match the pattern exactly
        """
        if embedding.pattern is not PatternId.FIG5_RIGHT:
            raise PatternMismatch(f"Expected a Fig5Right embedding, got {embedding.pattern.value}")
        errors = embedding_errors(self.graph, embedding, check_pattern=True)
        if errors:
            raise PatternMismatch("; ".join(errors))

        img = embedding.image
        d1 = self._cycle('D1', self._walk(embedding, ('x', 'c', 'z', 'a')))
        d2 = self._cycle('D2', self._walk(embedding, ('x', 'b', 'z', 'y')))
        d3 = self._cycle('D3', self._walk(embedding, ('c', 'b', 'a', 'y')))
        d4 = self._cycle('D4', self._walk(embedding, ('b', 'z', 'y')))

        by, yb = Point(img('b'), img('y')), Point(img('y'), img('b'))
        ca, ac = Point(img('c'), img('a')), Point(img('a'), img('c'))
        xz, zx = Point(img('x'), img('z')), Point(img('z'), img('x'))

        # pairs that interleave on a cycle have interleaved limit points
        layout = [
            ('X1', d1, [xz, ca, zx, ac], None),
            ('X2', d2, [xz, by, zx, yb], [(xz.label, by.label), (by.label, zx.label)]),
            ('X3', d3, [ca, by, ac, yb], [(ac.label, yb.label), (yb.label, ca.label)]),
            ('X4', d4, [by, yb], [(yb.label, by.label)]),
        ]
        arcs: List[WitnessArc] = []
        circles = []
        for name, cycle, points, keep in layout:
            circles.append(WitnessCircle(name, cycle, tuple(p.label for p in points)))
            arcs += self._circle_arcs(name, cycle, points, keep)
        # X4 has two arcs between the same points; keep one
        arcs = [a for a in arcs if a.circle != 'X4' or a.name == 'X4.1']

        self.logger.debug("Fig5Right witness from four limit circles")
        return SymbolicWitness(
            claimed_type=WitnessType.K33,
            points=[xz, zx, yb, ca, ac, by],
            arcs=arcs,
            circles=circles,
        )

    # ------------------------------------------------------------------
    # Three circles with poles
    # ------------------------------------------------------------------

    def _connector_roles(self, s: str, loxodromic: bool) -> Tuple[str, ...]:
        if not loxodromic:
            return ('x', s, 'z', 'y')
        if s == 'c':
            return ('x', 'a', 'z', 'c')
        return ('x', 'a', 'z', 'b')

    def pi(self, embedding: SubdivisionEmbedding) -> SymbolicWitness:
        """
        Three disjoint circles A, B, C, each joined by one arc to each of the
        poles (xz)^inf and (zx)^inf, with the action of y recorded.

        When x and s commute the arc lands at (ys)^inf instead of (xs)^inf.

        Raises:
            PatternMismatch: If embedding does not match the pattern exactly
        """
        if embedding.pattern is not PatternId.FIG5_LEFT:
            raise PatternMismatch(f"Expected a Fig5Left embedding, got {embedding.pattern.value}")
        try:
            check_embedding(self.graph, embedding, check_pattern=True)
        except InvalidEmbedding as e:
            raise PatternMismatch(str(e)) from None

        img = embedding.image
        gx, gy, gz = img('x'), img('y'), img('z')
        north, south = Point(gx, gz), Point(gz, gx)

        points = [north, south]
        arcs: List[WitnessArc] = []
        circles = []
        flips: Dict[str, Tuple[Point, Point]] = {}
        for s in SIDE_ONE:
            name = s.upper()
            cycle = self._cycle(name, self._walk(embedding, ('x', s, 'y')))
            loxodromic = not self.graph.has_edge(gx, img(s))
            connector = self._cycle(
                f"{name}*", self._walk(embedding, self._connector_roles(s, loxodromic))
            )
            near = Point(gx if loxodromic else gy, img(s))
            far = near.reversed()
            points += [near, far]
            circles.append(WitnessCircle(name, cycle, (near.label, far.label)))
            arcs += self._circle_arcs(name, cycle, [near, far])
            arcs.append(WitnessArc(f"N{name}", north.label, near.label, connector))
            # x lies on the connector, so its image of the N arc stays on the same limit circle
            moved = near.translate(gx, self.graph) == far
            arcs.append(WitnessArc(
                f"S{name}", south.label, far.label, _rotated(connector, gz),
                image_of=f"N{name}" if moved else None,
                translate=gx if moved else None,
            ))

            # y reflects the circle; its fixed points come from y's neighbours on the cycle
            i = cycle.index(gy)
            left, right = cycle[i - 1], cycle[(i + 1) % len(cycle)]
            flips[name] = (Point(left, right), Point(right, left))

        involution = Involution(
            generator=gy,
            point_images={p.label: p.translate(gy, self.graph) for p in points},
            flips=flips,
        )
        self.logger.debug(
            f"Pi witness: poles {north.label}, {south.label}; "
            f"{sum(1 for p in points if involution.point_images[p.label] == p)} points fixed by {gy}"
        )
        return SymbolicWitness(
            claimed_type=WitnessType.THREE_CIRCLES_WITH_POLES,
            points=points,
            arcs=arcs,
            circles=circles,
            poles=(north.label, south.label),
            involution=involution,
        )


# ============================================================================
# CONVENIENCE FUNCTIONS
# ============================================================================

def theta_witness(graph: SimplicialGraph, embedding: SubdivisionEmbedding) -> SymbolicWitness:
    return WitnessBuilder(graph).theta(embedding)


def k33_boundary_witness(graph: SimplicialGraph, embedding: SubdivisionEmbedding
                         ) -> Union[SymbolicWitness, JoinOfCantorSets]:
    return WitnessBuilder(graph).k33(embedding)


def fig5right_witness(graph: SimplicialGraph, embedding: SubdivisionEmbedding) -> SymbolicWitness:
    return WitnessBuilder(graph).fig5_right(embedding)


def pi_witness(graph: SimplicialGraph, embedding: SubdivisionEmbedding) -> SymbolicWitness:
    return WitnessBuilder(graph).pi(embedding)
