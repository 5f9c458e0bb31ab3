"""
Formal boundary points.

A point is a word g1...gk followed by the infinite alternating word (uv)^inf
for a non-adjacent pair u, v. Non-adjacent generators do not commute, so uv
has infinite order and the label names a genuine limit point.
"""

from dataclasses import dataclass, replace
from typing import Dict, List, Mapping, Sequence, Tuple

from src.graph.core import SimplicialGraph
from src.utils.errors import ValidationError


def _word(letters: Sequence[str]) -> str:
    if all(len(s) == 1 for s in letters):
        return ''.join(letters)
    return '.'.join(letters)


@dataclass(frozen=True, order=True)
class FormalBoundaryPoint:
    """
    Example:
        >>> FormalBoundaryPoint('a', 'b').label
        '(ab)^inf'
        >>> FormalBoundaryPoint('a', 'b', prefix=('y',)).label
        'y(ab)^inf'
    """
    u: str
    v: str
    prefix: Tuple[str, ...] = ()

    @property
    def label(self) -> str:
        return f"{_word(self.prefix)}({_word((self.u, self.v))})^inf"

    @property
    def letters(self) -> Tuple[str, ...]:
        return self.prefix + (self.u, self.v)

    def reversed(self) -> 'FormalBoundaryPoint':
        return replace(self, u=self.v, v=self.u)

    def translate(self, g: str, graph: SimplicialGraph) -> 'FormalBoundaryPoint':
        """
        Image of the point under the generator g, with the cancellations
        g g = 1, g (g v)^inf = (v g)^inf, and g fixing (uv)^inf when it
        commutes with u and v.
        """
        if self.prefix:
            if self.prefix[0] == g:
                return replace(self, prefix=self.prefix[1:])
            return replace(self, prefix=(g,) + self.prefix)
        if g in (self.u, self.v):
            return self.reversed()
        if graph.has_edge(g, self.u) and graph.has_edge(g, self.v):
            return self
        return replace(self, prefix=(g,))

    def errors(self, graph: SimplicialGraph) -> List[str]:
        """Problems with the point as a label over graph."""
        missing = [s for s in self.letters if s not in graph]
        if missing:
            return [f"Point {self.label}: unknown generators {missing}"]
        if self.u == self.v or graph.has_edge(self.u, self.v):
            return [f"Point {self.label}: {self.u}{self.v} has finite order"]
        return []

    def to_dict(self) -> Dict[str, object]:
        return {'prefix': list(self.prefix), 'pair': [self.u, self.v]}

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> 'FormalBoundaryPoint':
        try:
            u, v = data['pair']
            return cls(str(u), str(v), tuple(str(s) for s in data.get('prefix', ())))
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"Malformed boundary point {data!r}: {e}") from None
