"""
Tests for symbolic boundary witnesses and the witness checker.
"""

import dataclasses

import networkx as nx
import pytest

from src.graph import SimplicialGraph
from src.io import generate_with_embedding
from src.witnesses import (
    FormalBoundaryPoint,
    JoinOfCantorSets,
    WitnessType,
    fig5right_witness,
    k33_boundary_witness,
    matches_type,
    obstruction_check,
    pi_witness,
    theta_from_k33,
    theta_witness,
    verify_witness,
    witness_from_dict,
)
from src.utils.errors import BranchTooShort, NotInduced, PatternMismatch, ValidationError
from src.witnesses.verify import WitnessVerifier


class TestFormalPoints:

    def test_labels(self):
        assert FormalBoundaryPoint('a', 'b').label == '(ab)^inf'
        assert FormalBoundaryPoint('ax1', 'b').label == '(ax1.b)^inf'

    def test_translation(self, PI1):
        xz = FormalBoundaryPoint('x', 'z')
        assert xz.translate('y', PI1) == xz
        assert xz.translate('x', PI1) == FormalBoundaryPoint('z', 'x')
        moved = FormalBoundaryPoint('x', 'a').translate('y', PI1)
        assert moved.label == 'y(xa)^inf'
        assert moved.translate('y', PI1) == FormalBoundaryPoint('x', 'a')


class TestThetaWitness:

    def test_theta_233(self, THETA233, THETA233_embedding):
        witness = theta_witness(THETA233, THETA233_embedding)
        assert witness.claimed_type is WitnessType.THETA
        assert witness.labels == ['(ab)^inf', '(ba)^inf']
        assert len(witness.arcs) == 3
        assert verify_witness(witness, THETA233).ok

    @pytest.mark.parametrize('lengths', [(1, 2, 2), (2, 2, 2)])
    def test_short_branches(self, lengths):
        graph, embedding = generate_with_embedding('theta', lengths=lengths)
        with pytest.raises(BranchTooShort):
            theta_witness(graph, embedding)

    def test_theta_inside_k33(self, K33S1, K33S1_embedding):
        witness = theta_witness(K33S1, theta_from_k33(K33S1_embedding))
        assert verify_witness(witness, K33S1).ok


class TestK33Witness:

    def test_subdivided_k33(self, K33S1, K33S1_embedding):
        witness = k33_boundary_witness(K33S1, K33S1_embedding)
        assert witness.claimed_type is WitnessType.K33
        assert len(witness.points) == 6
        assert len(witness.arcs) == 9
        assert not nx.check_planarity(nx.Graph(witness.abstract_graph()))[0]
        assert verify_witness(witness, K33S1).ok

    def test_plain_k33_is_join_of_cantor_sets(self):
        graph, embedding = generate_with_embedding('k33_subdiv', branches=0)
        marker = k33_boundary_witness(graph, embedding)
        assert marker == JoinOfCantorSets(('a', 'b', 'c'), ('x', 'y', 'z'))
        assert verify_witness(marker, graph).ok

    def test_chord_is_rejected(self, K33S1, K33S1_embedding):
        graph = SimplicialGraph(K33S1.vertices, list(K33S1.edges) + [('ax1', 'by1')])
        with pytest.raises(NotInduced):
            k33_boundary_witness(graph, K33S1_embedding)

    def test_chord_in_provenance_cycle(self, K33S1, K33S1_embedding):
        witness = k33_boundary_witness(K33S1, K33S1_embedding)
        graph = SimplicialGraph(K33S1.vertices, list(K33S1.edges) + [('ax1', 'by1')])
        result = verify_witness(witness, graph)
        assert not result.ok
        assert any("cycle not induced" in d for d in result.diagnostics)


class TestFig5RightWitness:

    def test_four_circles(self, FIG5R1, FIG5R1_embedding):
        witness = fig5right_witness(FIG5R1, FIG5R1_embedding)
        assert [c.name for c in witness.circles] == ['X1', 'X2', 'X3', 'X4']
        assert all(len(c.cycle) >= 4 for c in witness.circles)
        assert not nx.check_planarity(nx.Graph(witness.abstract_graph()))[0]
        assert verify_witness(witness, FIG5R1).ok

    def test_twice_subdivided(self):
        graph, embedding = generate_with_embedding('fig5_right', branches=2)
        assert verify_witness(fig5right_witness(graph, embedding), graph).ok

    def test_wrong_pattern(self, PI1, PI1_embedding):
        with pytest.raises(PatternMismatch):
            fig5right_witness(PI1, PI1_embedding)


class TestPiWitness:

    def test_three_circles_with_poles(self, PI1, PI1_embedding):
        witness = pi_witness(PI1, PI1_embedding)
        assert witness.claimed_type is WitnessType.THREE_CIRCLES_WITH_POLES
        assert witness.poles == ('(xz)^inf', '(zx)^inf')
        assert [c.name for c in witness.circles] == ['A', 'B', 'C']
        assert len([a for a in witness.arcs if a.name[0] in 'NS']) == 6
        assert matches_type(witness)
        assert verify_witness(witness, PI1).ok
        assert obstruction_check(witness)

    def test_involution_fixes_only_the_poles(self, PI1, PI1_embedding):
        witness = pi_witness(PI1, PI1_embedding)
        images = witness.involution.point_images
        fixed = [label for label in witness.labels if images[label].label == label]
        assert fixed == list(witness.poles)

    def test_without_involution(self, PI1, PI1_embedding):
        witness = pi_witness(PI1, PI1_embedding).without_involution()
        assert verify_witness(witness, PI1).ok
        assert not obstruction_check(witness)

    def test_commuting_x_and_a(self):
        graph, embedding = generate_with_embedding('pi', branches={'ax': 0})
        witness = pi_witness(graph, embedding)
        assert '(ya)^inf' in witness.labels
        assert verify_witness(witness, graph).ok
        assert obstruction_check(witness)

    def test_south_arcs_are_translates_of_north_arcs(self, PI1, PI1_embedding):
        witness = pi_witness(PI1, PI1_embedding)
        arcs = {a.name: a for a in witness.arcs}
        for name in 'ABC':
            north, south = arcs[f"N{name}"], arcs[f"S{name}"]
            assert south.image_of == north.name
            assert south.translate == 'x'
            assert south.provenance[0] == 'z'
            assert set(south.provenance) == set(north.provenance)

    def test_commuting_arc_is_not_a_translate(self):
        graph, embedding = generate_with_embedding('pi', branches={'ax': 0})
        arcs = {a.name: a for a in pi_witness(graph, embedding).arcs}
        assert arcs['SA'].translate is None
        assert arcs['SB'].translate == 'x'

    def test_tampered_translate(self, PI1, PI1_embedding):
        witness = pi_witness(PI1, PI1_embedding)
        witness.arcs = [dataclasses.replace(a, translate='y') if a.name == 'SA' else a for a in witness.arcs]
        result = verify_witness(witness, PI1)
        assert not result.ok
        assert any("not the image of" in d for d in result.diagnostics)

    def test_dangling_translate(self, PI1, PI1_embedding):
        witness = pi_witness(PI1, PI1_embedding)
        witness.arcs = [dataclasses.replace(a, image_of='NZ') if a.name == 'SB' else a for a in witness.arcs]
        result = verify_witness(witness, PI1)
        assert "Arc SB: incomplete translation record" in result.diagnostics

    def test_dict_round_trip(self, PI1, PI1_embedding):
        witness = pi_witness(PI1, PI1_embedding)
        assert witness_from_dict(witness.to_dict()) == witness


class TestVerifierErrors:

    def test_package_errors_mean_malformed(self, PI1, PI1_embedding, monkeypatch):
        def broken(self, witness):
            raise ValidationError("Unknown witness point 'q'")

        monkeypatch.setattr(WitnessVerifier, '_check_type', broken)
        result = verify_witness(pi_witness(PI1, PI1_embedding), PI1)
        assert not result.ok
        assert result.diagnostics[0] == "malformed witness: Unknown witness point 'q'"

    def test_programming_errors_propagate(self, PI1, PI1_embedding, monkeypatch):
        def broken(self, witness):
            raise TypeError("unhashable")

        monkeypatch.setattr(WitnessVerifier, '_check_type', broken)
        with pytest.raises(TypeError):
            verify_witness(pi_witness(PI1, PI1_embedding), PI1)

    def test_unknown_point(self, PI1, PI1_embedding):
        with pytest.raises(ValidationError):
            pi_witness(PI1, PI1_embedding).point('(ab)^inf')
