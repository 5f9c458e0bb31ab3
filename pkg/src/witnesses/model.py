"""
Symbolic circle-and-arc witnesses.

A witness is a finite graph drawn in the boundary: its nodes are formal
boundary points and its edges are arcs, each lying on the limit circle of
an induced cycle of the defining graph (its provenance).
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping, Optional, Tuple

import networkx as nx

from src.witnesses.points import FormalBoundaryPoint
from src.utils.errors import ValidationError


class WitnessType(Enum):
    """Abstract shape a witness claims to have"""
    THETA = "Theta"
    K33 = "K33"
    THREE_CIRCLES_WITH_POLES = "ThreeCirclesWithPoles"


@dataclass(frozen=True)
class WitnessArc:
    """
    Arc of the limit circle of its provenance cycle.

    An arc built by moving another one records that arc in image_of and
    the generator acting on it in translate.
    """
    name: str
    start: str
    end: str
    provenance: Tuple[str, ...]
    circle: Optional[str] = None
    image_of: Optional[str] = None
    translate: Optional[str] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            'name': self.name,
            'start': self.start,
            'end': self.end,
            'provenance': list(self.provenance),
            'circle': self.circle,
            'image_of': self.image_of,
            'translate': self.translate,
        }


@dataclass(frozen=True)
class WitnessCircle:
    """Limit circle of an induced cycle, with the witness points on it."""
    name: str
    cycle: Tuple[str, ...]
    points: Tuple[str, ...]

    def to_dict(self) -> Dict[str, object]:
        return {'name': self.name, 'cycle': list(self.cycle), 'points': list(self.points)}


@dataclass(frozen=True)
class Involution:
    """
    Action of one generator on a witness.

    Attributes:
        generator: Vertex whose reflection acts
        point_images: Witness point label -> image point
        flips: Circle name -> the two fixed points of the reflection on it
    """
    generator: str
    point_images: Dict[str, FormalBoundaryPoint]
    flips: Dict[str, Tuple[FormalBoundaryPoint, FormalBoundaryPoint]]

    def to_dict(self) -> Dict[str, object]:
        return {
            'generator': self.generator,
            'point_images': {k: self.point_images[k].to_dict() for k in sorted(self.point_images)},
            'flips': {
                k: [p.to_dict() for p in self.flips[k]] for k in sorted(self.flips)
            },
        }


@dataclass
class SymbolicWitness:
    claimed_type: WitnessType
    points: List[FormalBoundaryPoint]
    arcs: List[WitnessArc]
    circles: List[WitnessCircle] = field(default_factory=list)
    poles: Tuple[str, ...] = ()
    involution: Optional[Involution] = None

    def point(self, label: str) -> FormalBoundaryPoint:
        for p in self.points:
            if p.label == label:
                return p
        raise ValidationError(f"Unknown witness point '{label}'")

    @property
    def labels(self) -> List[str]:
        return [p.label for p in self.points]

    def abstract_graph(self) -> nx.MultiGraph:
        """Points as nodes, one edge per arc."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.labels)
        for arc in self.arcs:
            graph.add_edge(arc.start, arc.end, key=arc.name)
        return graph

    def without_involution(self) -> 'SymbolicWitness':
        return SymbolicWitness(
            self.claimed_type, list(self.points), list(self.arcs),
            list(self.circles), self.poles, None,
        )

    def to_dict(self) -> Dict[str, object]:
        return {
            'kind': 'SymbolicWitness',
            'claimed_type': self.claimed_type.value,
            'points': [p.to_dict() for p in self.points],
            'arcs': [a.to_dict() for a in self.arcs],
            'circles': [c.to_dict() for c in self.circles],
            'poles': list(self.poles),
            'involution': self.involution.to_dict() if self.involution else None,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> 'SymbolicWitness':
        """
        Raises:
            ValidationError: On missing fields or unknown witness type
        """
        try:
            involution = None
            if data.get('involution'):
                raw = data['involution']
                involution = Involution(
                    generator=raw['generator'],
                    point_images={
                        k: FormalBoundaryPoint.from_dict(v) for k, v in raw['point_images'].items()
                    },
                    flips={
                        k: tuple(FormalBoundaryPoint.from_dict(p) for p in v)
                        for k, v in raw['flips'].items()
                    },
                )
            return cls(
                claimed_type=WitnessType(data['claimed_type']),
                points=[FormalBoundaryPoint.from_dict(p) for p in data['points']],
                arcs=[
                    WitnessArc(
                        a['name'], a['start'], a['end'], tuple(a['provenance']), a.get('circle'),
                        a.get('image_of'), a.get('translate'),
                    )
                    for a in data['arcs']
                ],
                circles=[
                    WitnessCircle(c['name'], tuple(c['cycle']), tuple(c['points']))
                    for c in data.get('circles', [])
                ],
                poles=tuple(data.get('poles', ())),
                involution=involution,
            )
        except (KeyError, TypeError) as e:
            raise ValidationError(f"Malformed witness: missing or bad field {e}") from None
        except ValueError as e:
            raise ValidationError(f"Malformed witness: {e}") from None


@dataclass(frozen=True)
class JoinOfCantorSets:
    """
    Marker for an unsubdivided induced K33: the boundary is the join of two
    Cantor sets, which is non-planar.
    """
    side_one: Tuple[str, ...]
    side_two: Tuple[str, ...]

    def to_dict(self) -> Dict[str, object]:
        return {
            'kind': 'JoinOfCantorSets',
            'side_one': list(self.side_one),
            'side_two': list(self.side_two),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> 'JoinOfCantorSets':
        try:
            return cls(tuple(data['side_one']), tuple(data['side_two']))
        except (KeyError, TypeError) as e:
            raise ValidationError(f"Malformed JoinOfCantorSets marker: {e}") from None


def witness_from_dict(data: Mapping[str, object]):
    """Either witness form, dispatched on 'kind'."""
    kind = data.get('kind') if isinstance(data, Mapping) else None
    if kind == 'JoinOfCantorSets':
        return JoinOfCantorSets.from_dict(data)
    if kind == 'SymbolicWitness':
        return SymbolicWitness.from_dict(data)
    raise ValidationError(f"Unknown witness kind {kind!r}")
