"""
Tests for the command-line interface, run in-process through cli.main.
"""

import json

import networkx as nx
import pytest

import cli
from src.config.settings import (
    EXIT_BUDGET_EXCEEDED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
)
from src.io import format_graph, parse_document, parse_graph


@pytest.fixture
def write_graph(tmp_path):
    def write(graph, name='graph.txt', fmt='edgelist'):
        path = tmp_path / name
        path.write_text(format_graph(graph, fmt), encoding='utf-8')
        return str(path)
    return write


class TestGeneratorParams:

    def test_integer_and_pairs(self):
        assert cli.generator_params('mobius', ['4']) == {'n': 4}
        assert cli.generator_params('pi', ['2']) == {'branches': 2}
        assert cli.generator_params('pi', ['ax=0', 'by=2']) == {'branches': {'ax': 0, 'by': 2}}
        assert cli.generator_params('theta', ['2', '3', '4']) == {'lengths': [2, 3, 4]}
        assert cli.generator_params('petersen', []) == {}

    @pytest.mark.parametrize('family, tokens', [
        ('cycle', []),
        ('cycle', ['x']),
        ('pi', ['1', 'ax=2']),
        ('petersen', ['3']),
    ])
    def test_rejected(self, family, tokens):
        with pytest.raises(cli.BadParams):
            cli.generator_params(family, tokens)


class TestGen:

    def test_pi(self, capsys):
        assert cli.main(['gen', 'pi', '1']) == EXIT_OK
        graph = parse_graph(capsys.readouterr().out)
        assert (len(graph), len(graph.edges)) == (15, 20)

    def test_triangle_params(self, capsys):
        assert cli.main(['gen', 'pi', '0']) == EXIT_INPUT_ERROR
        assert capsys.readouterr().err.startswith("error:")

    def test_json_output(self, capsys):
        assert cli.main(['gen', 'theta', '2', '2', '3', '--format', 'json']) == EXIT_OK
        graph = parse_graph(capsys.readouterr().out, 'json')
        assert len(graph) == 6


class TestAnalyze:

    def test_mobius_text(self, capsys, write_graph, M4):
        assert cli.main(['analyze', write_graph(M4), '--no-color']) == EXIT_OK
        assert 'MengerCurve' in capsys.readouterr().out

    def test_mobius_json(self, capsys, write_graph, M4):
        assert cli.main(['analyze', write_graph(M4), '--json']) == EXIT_OK
        document = parse_document(capsys.readouterr().out)
        assert document.kind == 'classification'

    def test_pi_text_lists_references_and_notes(self, capsys, write_graph, PI1):
        assert cli.main(['analyze', write_graph(PI1), '--no-color']) == EXIT_OK
        out = capsys.readouterr().out
        assert '    see: ' in out
        assert 'Notes:' in out
        assert 'induced Pi on' in out

    def test_budget(self, write_graph, PI1):
        assert cli.main(['analyze', write_graph(PI1), '--budget', '10']) == EXIT_BUDGET_EXCEEDED

    def test_stalled_reduction(self, write_graph, K33AB):
        assert cli.main(['analyze', write_graph(K33AB)]) == EXIT_BUDGET_EXCEEDED

    def test_triangle(self, write_graph, K3):
        assert cli.main(['analyze', write_graph(K3)]) == EXIT_INPUT_ERROR

    def test_missing_file(self, tmp_path):
        assert cli.main(['analyze', str(tmp_path / 'none.txt')]) == EXIT_INPUT_ERROR


class TestReduceAndVerify:

    def test_certificate_verifies_separately(self, capsys, tmp_path, write_graph, K5S1):
        assert cli.main(['reduce', write_graph(K5S1), '--json']) == EXIT_OK
        certificate = tmp_path / 'cert.json'
        certificate.write_text(capsys.readouterr().out, encoding='utf-8')

        assert cli.main(['verify', str(certificate)]) == EXIT_OK
        assert capsys.readouterr().out.startswith('reduction document: PASS')

    def test_tampered_certificate(self, capsys, tmp_path, write_graph, K5S1):
        cli.main(['reduce', write_graph(K5S1), '--json'])
        data = json.loads(capsys.readouterr().out)
        data['payload']['doubling_sequence'] = []
        certificate = tmp_path / 'cert.json'
        certificate.write_text(json.dumps(data), encoding='utf-8')

        assert cli.main(['verify', str(certificate)]) == EXIT_VERIFICATION_FAILED
        assert 'FAIL' in capsys.readouterr().out

    def test_malformed_document(self, tmp_path):
        path = tmp_path / 'cert.json'
        path.write_text('{"kind": "reduction"}', encoding='utf-8')
        assert cli.main(['verify', str(path)]) == EXIT_INPUT_ERROR

    def test_planar_input(self, write_graph, C6):
        assert cli.main(['reduce', write_graph(C6)]) == EXIT_INPUT_ERROR

    def test_budget(self, write_graph, PI1):
        assert cli.main(['reduce', write_graph(PI1), '--budget', '5']) == EXIT_BUDGET_EXCEEDED

    def test_stalled_reduction(self, capsys, write_graph, K33AB):
        assert cli.main(['reduce', write_graph(K33AB)]) == EXIT_BUDGET_EXCEEDED
        assert 'Reduction stalled' in capsys.readouterr().err


class TestPlanarity:

    def test_pi_with_doubles(self, capsys, write_graph, PI1):
        assert cli.main(['planarity', write_graph(PI1), '--doubles', '--json']) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data['planar'] is False
        assert data['kuratowski']['pattern'] in ('K33', 'K5')
        assert data['planar_double'] in PI1

    def test_dot_input(self, capsys, write_graph, C6):
        path = write_graph(C6, 'c6.dot', 'dot')
        assert cli.main(['planarity', path, '--json']) == EXIT_OK
        assert json.loads(capsys.readouterr().out)['planar'] is True


class TestWitnessAndDouble:

    @pytest.mark.parametrize('fixture, pattern', [
        ('PI1', 'pi'),
        ('K33S1', 'k33'),
        ('FIG5R1', 'fig5_right'),
        ('THETA233', 'theta'),
    ])
    def test_witnesses(self, request, write_graph, fixture, pattern):
        graph = request.getfixturevalue(fixture)
        assert cli.main(['witness', write_graph(graph), '--pattern', pattern]) == EXIT_OK

    def test_witness_json_verifies(self, capsys, tmp_path, write_graph, PI1):
        assert cli.main(['witness', write_graph(PI1), '--pattern', 'pi', '--json']) == EXIT_OK
        path = tmp_path / 'witness.json'
        path.write_text(capsys.readouterr().out, encoding='utf-8')
        assert cli.main(['verify', str(path)]) == EXIT_OK

    def test_missing_pattern(self, write_graph, C6):
        assert cli.main(['witness', write_graph(C6), '--pattern', 'fig5_right']) == EXIT_INPUT_ERROR

    def test_double_pentagon(self, capsys, write_graph, C5, C6):
        assert cli.main(['double', write_graph(C5), 'v0']) == EXIT_OK
        doubled = parse_graph(capsys.readouterr().out)
        assert nx.is_isomorphic(doubled.nx, C6.nx)

    def test_double_unknown_vertex(self, write_graph, C5):
        assert cli.main(['double', write_graph(C5), 'q']) == EXIT_INPUT_ERROR
