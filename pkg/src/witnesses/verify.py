"""
Independent checks for symbolic witnesses.

The abstract type is confirmed by smoothing away points of degree two and
testing isomorphism with the model multigraph.
"""

import logging
from typing import List, Union

import networkx as nx

from src.graph.core import SimplicialGraph, is_induced_cycle
from src.reduction.certificate import VerificationResult
from src.utils.errors import RacgError
from src.witnesses.model import JoinOfCantorSets, SymbolicWitness, WitnessType
from src.witnesses.points import FormalBoundaryPoint

logger = logging.getLogger(__name__)


# ============================================================================
# MODEL SHAPES
# ============================================================================

def _theta_model() -> nx.MultiGraph:
    model = nx.MultiGraph()
    model.add_edges_from([('p', 'q')] * 3)
    return model


def _k33_model() -> nx.MultiGraph:
    return nx.MultiGraph(nx.complete_bipartite_graph(3, 3))


def _three_circles_model() -> nx.MultiGraph:
    model = nx.MultiGraph()
    for i in range(3):
        near, far = f"n{i}", f"f{i}"
        model.add_edges_from([(near, far), (near, far), ('N', near), ('S', far)])
    return model


MODELS = {
    WitnessType.THETA: _theta_model,
    WitnessType.K33: _k33_model,
    WitnessType.THREE_CIRCLES_WITH_POLES: _three_circles_model,
}


def smooth(graph: nx.MultiGraph) -> nx.MultiGraph:
    """Suppress every node of degree two that is not on a loop."""
    reduced = nx.MultiGraph(graph)
    changed = True
    while changed:
        changed = False
        for node in sorted(reduced.nodes):
            if reduced.degree(node) != 2 or reduced.has_edge(node, node):
                continue
            (_, p), (_, q) = list(reduced.edges(node))
            reduced.remove_node(node)
            reduced.add_edge(p, q)
            changed = True
            break
    return reduced


def matches_type(witness: SymbolicWitness) -> bool:
    """Abstract graph is a subdivision of the claimed shape."""
    return nx.is_isomorphic(smooth(witness.abstract_graph()), MODELS[witness.claimed_type]())


# ============================================================================
# VERIFIER
# ============================================================================

class WitnessVerifier:
    """
    Re-checks a witness against a graph and reports every failure.

    Example:
        >>> result = WitnessVerifier(graph).verify(witness)
        >>> result.ok, result.diagnostics
    """

    def __init__(self, graph: SimplicialGraph):
        self.graph = graph
        self.logger = logging.getLogger(self.__class__.__name__)

    def verify(self, witness: Union[SymbolicWitness, JoinOfCantorSets]) -> VerificationResult:
        try:
            if isinstance(witness, JoinOfCantorSets):
                diagnostics = self._check_join(witness)
            else:
                diagnostics = (
                    self._check_points(witness)
                    + self._check_arcs(witness)
                    + self._check_circles(witness)
                    + self._check_translates(witness)
                    + self._check_type(witness)
                    + self._check_involution(witness)
                )
        except RacgError as e:
            diagnostics = [f"malformed witness: {e}"]

        if diagnostics:
            self.logger.error(f"Witness rejected: {diagnostics[0]}")
        return VerificationResult(ok=not diagnostics, diagnostics=diagnostics)

    def _check_join(self, marker: JoinOfCantorSets) -> List[str]:
        one, two = marker.side_one, marker.side_two
        if len(set(one)) != 3 or len(set(two)) != 3 or set(one) & set(two):
            return ["JoinOfCantorSets needs two disjoint sides of three vertices"]
        errors = []
        for u in one:
            for w in two:
                if not self.graph.has_edge(u, w):
                    errors.append(f"JoinOfCantorSets: {u}-{w} is not an edge")
        for side in (one, two):
            for i, u in enumerate(side):
                for w in side[i + 1:]:
                    if self.graph.has_edge(u, w):
                        errors.append(f"JoinOfCantorSets: side edge {u}-{w}")
        return errors

    def _check_points(self, witness: SymbolicWitness) -> List[str]:
        errors = []
        for point in witness.points:
            errors += point.errors(self.graph)
        if len(set(witness.labels)) != len(witness.points):
            errors.append("Repeated point labels")
        return errors

    def _check_cycle(self, where: str, cycle) -> List[str]:
        if len(cycle) < 4:
            return [f"{where}: cycle of length {len(cycle)} is shorter than 4"]
        if not is_induced_cycle(self.graph, tuple(cycle)):
            return [f"{where}: cycle not induced"]
        return []

    def _check_arcs(self, witness: SymbolicWitness) -> List[str]:
        errors = []
        labels = set(witness.labels)
        for arc in witness.arcs:
            where = f"Arc {arc.name}"
            if arc.start not in labels or arc.end not in labels:
                errors.append(f"{where}: endpoint is not a witness point")
                continue
            if arc.start == arc.end:
                errors.append(f"{where}: endpoints coincide")
            errors += self._check_cycle(where, arc.provenance)
            on_cycle = set(arc.provenance)
            for label in (arc.start, arc.end):
                if not set(witness.point(label).letters) <= on_cycle:
                    errors.append(f"{where}: point {label} is not on the circle of its cycle")
        return errors

    def _check_circles(self, witness: SymbolicWitness) -> List[str]:
        errors = []
        names = {c.name for c in witness.circles}
        for circle in witness.circles:
            where = f"Circle {circle.name}"
            errors += self._check_cycle(where, circle.cycle)
            for label in circle.points:
                if not set(witness.point(label).letters) <= set(circle.cycle):
                    errors.append(f"{where}: point {label} does not lie on it")
        for arc in witness.arcs:
            if arc.circle is None:
                continue
            if arc.circle not in names:
                errors.append(f"Arc {arc.name}: unknown circle {arc.circle}")
                continue
            circle = next(c for c in witness.circles if c.name == arc.circle)
            if tuple(arc.provenance) != tuple(circle.cycle):
                errors.append(f"Arc {arc.name}: provenance differs from circle {arc.circle}")
        for label in witness.poles:
            if label not in witness.labels:
                errors.append(f"Pole {label} is not a witness point")
        return errors

    def _check_translates(self, witness: SymbolicWitness) -> List[str]:
        errors = []
        arcs = {a.name: a for a in witness.arcs}
        labels = set(witness.labels)
        for arc in witness.arcs:
            if arc.image_of is None and arc.translate is None:
                continue
            where = f"Arc {arc.name}"
            source, g = arcs.get(arc.image_of), arc.translate
            if source is None or g is None:
                errors.append(f"{where}: incomplete translation record")
                continue
            if g not in source.provenance:
                errors.append(f"{where}: {g} is not on the cycle of {source.name}")
            if set(arc.provenance) != set(source.provenance):
                errors.append(f"{where}: cycle differs from that of {source.name}")
            for mine, theirs in ((arc.start, source.start), (arc.end, source.end)):
                if not {mine, theirs} <= labels:
                    continue
                if witness.point(theirs).translate(g, self.graph) != witness.point(mine):
                    errors.append(f"{where}: {mine} is not the image of {theirs} under {g}")
        return errors

    def _check_type(self, witness: SymbolicWitness) -> List[str]:
        if not matches_type(witness):
            return [f"abstract graph is not a subdivision of {witness.claimed_type.value}"]
        if witness.claimed_type is WitnessType.K33:
            simple = nx.Graph(witness.abstract_graph())
            if nx.check_planarity(simple)[0]:
                return ["abstract K33 witness is planar"]
        return []

    def _check_involution(self, witness: SymbolicWitness) -> List[str]:
        involution = witness.involution
        if involution is None:
            return []
        g = involution.generator
        if g not in self.graph:
            return [f"Involution generator '{g}' is not a vertex"]

        errors = []
        for point in witness.points:
            image = involution.point_images.get(point.label)
            expected = point.translate(g, self.graph)
            if image != expected:
                errors.append(f"Involution: image of {point.label} should be {expected.label}")
            elif expected.translate(g, self.graph) != point:
                errors.append(f"Involution: {g} does not have order two on {point.label}")
        for label in witness.poles:
            image = involution.point_images.get(label)
            if image is None or image.label != label:
                errors.append(f"Involution moves pole {label}")

        for circle in witness.circles:
            where = f"Involution on circle {circle.name}"
            if g not in circle.cycle:
                errors.append(f"{where}: circle is not invariant")
                continue
            axis = involution.flips.get(circle.name)
            if axis is None:
                errors.append(f"{where}: no flip recorded")
                continue
            i = circle.cycle.index(g)
            left, right = circle.cycle[i - 1], circle.cycle[(i + 1) % len(circle.cycle)]
            if {p.label for p in axis} != {f.label for f in _axis(left, right)}:
                errors.append(f"{where}: fixed points are not the limit points of {left}{right}")
            if self.graph.has_edge(left, right):
                errors.append(f"{where}: {left}{right} has finite order")
        return errors


def _axis(left: str, right: str):
    return FormalBoundaryPoint(left, right), FormalBoundaryPoint(right, left)


# ============================================================================
# CONVENIENCE FUNCTIONS
# ============================================================================

def verify_witness(witness: Union[SymbolicWitness, JoinOfCantorSets],
                   graph: SimplicialGraph) -> VerificationResult:
    return WitnessVerifier(graph).verify(witness)


def obstruction_check(witness: Union[SymbolicWitness, JoinOfCantorSets]) -> bool:
    """
    True when the recorded involution fixes both poles and flips all three
    circles: such an action on the three-circles figure cannot extend to
    the sphere.
    """
    if not isinstance(witness, SymbolicWitness) or witness.involution is None:
        return False
    if witness.claimed_type is not WitnessType.THREE_CIRCLES_WITH_POLES:
        return False
    involution = witness.involution
    if len(witness.poles) != 2 or len(witness.circles) != 3:
        return False
    poles_fixed = all(
        label in involution.point_images and involution.point_images[label].label == label
        for label in witness.poles
    )
    circles_flipped = {c.name for c in witness.circles} <= set(involution.flips)
    return poles_fixed and circles_flipped
