"""
Boundary verdicts.

A verdict states a conclusion about every CAT(0) boundary of the group
together with the hypotheses it rests on. Hypotheses the tool cannot
decide (local connectivity, local cut points) are listed as unchecked and
never folded into the conclusion.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Mapping, Tuple

from src.utils.errors import ValidationError


class VerdictKind(Enum):
    GRAPH_PLANAR_BOUNDARY = "GraphPlanarBoundary"
    EVERY_BOUNDARY_NON_PLANAR = "EveryBoundaryNonPlanar"
    PI_OBSTRUCTION = "PiObstruction"
    MENGER_CURVE = "MengerCurve"
    SIERPINSKI_CARPET_CANDIDATE = "SierpinskiCarpetCandidate"
    CONDITIONALLY_NON_PLANAR = "ConditionallyNonPlanar"
    PLANAR_DOUBLE_BOUNDARY = "PlanarDoubleBoundary"


# Unchecked boundary hypotheses
LOCALLY_CONNECTED = "boundary is locally connected"
NO_LOCAL_CUT_POINTS = "boundary has no local cut points"
CONNECTED = "boundary is connected"

# ============================================================================
# REFERENCES
# ============================================================================

REFERENCES = {
    'bestvina-mess': "M. Bestvina and G. Mess, The boundary of negatively curved groups, "
                     "J. Amer. Math. Soc. 4 (1991)",
    'bowditch': "B. H. Bowditch, Cut points and canonical splittings of hyperbolic groups, "
                "Acta Math. 180 (1998)",
    'caprace': "P.-E. Caprace, Buildings with isolated subspaces and relatively hyperbolic "
               "Coxeter groups, Innov. Incidence Geom. 10 (2009)",
    'claytor': "S. Claytor, Topological immersion of Peanian continua in a spherical surface, "
               "Ann. of Math. 35 (1934)",
    'davis': "M. W. Davis, The Geometry and Topology of Coxeter Groups, Princeton University Press (2008)",
    'hruska-ruane': "G. C. Hruska and K. Ruane, Connectedness properties and splittings of groups "
                    "with isolated flats",
    'kapovich-kleiner': "M. Kapovich and B. Kleiner, Hyperbolic groups with low-dimensional boundary, "
                        "Ann. Sci. Ecole Norm. Sup. 33 (2000)",
    'kuratowski': "K. Kuratowski, Sur le probleme des courbes gauches en topologie, Fund. Math. 15 (1930)",
    'moussong': "G. Moussong, Hyperbolic Coxeter groups, PhD thesis, Ohio State University (1988)",
    'swiatkowski': "J. Swiatkowski, Hyperbolic Coxeter groups with Sierpinski carpet boundary, "
                   "Bull. London Math. Soc. 48 (2016)",
}


def references(*keys: str) -> Tuple[str, ...]:
    """Bibliography entries for the given keys, in the given order."""
    return tuple(REFERENCES[k] for k in keys)


@dataclass(frozen=True)
class Verdict:
    """
    Attributes:
        kind: Verdict tag
        conclusion: What follows
        hypotheses: Graph-level facts the verdict rests on (all checked)
        unchecked: Boundary hypotheses the conclusion is conditional on
        citation: The result the conclusion comes from
        references: Bibliography entries behind the citation
        notes: Further statements attached to the verdict
        details: Supporting data (vertices, terminal kinds, strategies)
    """
    kind: VerdictKind
    conclusion: str
    hypotheses: Tuple[str, ...] = ()
    unchecked: Tuple[str, ...] = ()
    citation: str = ''
    references: Tuple[str, ...] = ()
    notes: Tuple[str, ...] = ()
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def conditional(self) -> bool:
        return bool(self.unchecked)

    def to_dict(self) -> Dict[str, object]:
        return {
            'kind': self.kind.value,
            'conclusion': self.conclusion,
            'hypotheses': list(self.hypotheses),
            'unchecked': list(self.unchecked),
            'citation': self.citation,
            'references': list(self.references),
            'notes': list(self.notes),
            'details': {k: self.details[k] for k in sorted(self.details)},
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> 'Verdict':
        try:
            return cls(
                kind=VerdictKind(data['kind']),
                conclusion=data['conclusion'],
                hypotheses=tuple(data.get('hypotheses', ())),
                unchecked=tuple(data.get('unchecked', ())),
                citation=data.get('citation', ''),
                references=tuple(data.get('references', ())),
                notes=tuple(data.get('notes', ())),
                details=dict(data.get('details', {})),
            )
        except (KeyError, ValueError, TypeError) as e:
            raise ValidationError(f"Malformed verdict: {e}") from None
