"""
Tests for graph parsing, generators and JSON documents.
"""

import json

import pytest

from src.classifier import classify
from src.graph import SimplicialGraph
from src.io import (
    CertificateDocument,
    DocumentValidator,
    emit_document,
    format_graph,
    generate,
    generate_with_embedding,
    load_graph,
    parse_document,
    parse_graph,
    verify_document,
)
from src.reduction import reduce
from src.utils.errors import (
    BadParams,
    DuplicateEdge,
    ParseError,
    SchemaVersionMismatch,
    SelfLoop,
    ValidationError,
)
from src.witnesses import pi_witness


class TestEdgeList:

    def test_comments_and_lone_vertices(self):
        graph = parse_graph("# header\na b  # trailing note\nc\n")
        assert graph.vertices == ('a', 'b', 'c')
        assert graph.edges == (('a', 'b'),)

    def test_labels_may_contain_hash(self):
        graph = parse_graph("v#1 w\n")
        assert 'v#1' in graph

    def test_too_many_labels(self):
        with pytest.raises(ParseError) as info:
            parse_graph("a b\na b c\n")
        assert (info.value.line, info.value.column) == (2, 5)

    def test_bad_label(self):
        with pytest.raises(ParseError):
            parse_graph("a b!\n")

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            parse_graph("a a\n")

    def test_duplicate(self):
        with pytest.raises(DuplicateEdge) as info:
            parse_graph("a b\nb a\n")
        assert info.value.line == 2


class TestDot:

    def test_subset(self):
        text = """
        strict graph G {
            node [shape=box];
            rankdir=LR
            a -- b -- c [color=red];
            "d";  // isolated
        }
        """
        graph = parse_graph(text, 'dot')
        assert graph.vertices == ('a', 'b', 'c', 'd')
        assert set(graph.edges) == {('a', 'b'), ('b', 'c')}

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdge):
            parse_graph("graph { a -- b; b -- a; }", 'dot')

    @pytest.mark.parametrize('text', [
        "digraph { a -> b }",
        "graph { a -> b }",
        "graph { subgraph s { a -- b } }",
        "graph { a -- b",
        "graph { a -- b } extra",
    ])
    def test_rejected(self, text):
        with pytest.raises(ParseError):
            parse_graph(text, 'dot')


class TestJson:

    def test_vertices_and_edges(self):
        graph = parse_graph('{"vertices": ["a", "b", "c"], "edges": [["a", "b"]]}', 'json')
        assert graph.vertices == ('a', 'b', 'c')

    def test_vertices_from_edges(self):
        graph = parse_graph('{"edges": [["a", "b"], ["b", "c"]]}', 'json')
        assert graph.vertices == ('a', 'b', 'c')

    def test_unknown_vertex(self):
        with pytest.raises(ParseError):
            parse_graph('{"vertices": ["a"], "edges": [["a", "b"]]}', 'json')

    def test_empty_vertex_list_declares_nothing(self):
        with pytest.raises(ParseError, match="unknown vertex 'a'"):
            parse_graph('{"vertices": [], "edges": [["a", "b"]]}', 'json')

    def test_bad_json_has_position(self):
        with pytest.raises(ParseError) as info:
            parse_graph('{"edges": [\n  ["a", "b"],,\n]}', 'json')
        assert info.value.line == 2


class TestFiles:

    @pytest.mark.parametrize('fmt, suffix', [('edgelist', '.txt'), ('dot', '.dot'), ('json', '.json')])
    def test_written_graphs_load_back(self, tmp_path, PI1, fmt, suffix):
        path = tmp_path / f"pi{suffix}"
        path.write_text(format_graph(PI1, fmt), encoding='utf-8')
        assert load_graph(path) == PI1

    def test_isolated_vertices_survive(self, tmp_path):
        graph = SimplicialGraph(['a', 'b', 'z'], [('a', 'b')])
        assert parse_graph(format_graph(graph)) == graph

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_graph(tmp_path / 'missing.txt')

    def test_unknown_extension(self, tmp_path):
        path = tmp_path / 'graph.xyz'
        path.write_text("a b\n")
        with pytest.raises(ParseError):
            load_graph(path)
        assert len(load_graph(path, 'edgelist')) == 2


class TestGenerators:

    def test_pi_counts(self, PI1):
        assert len(PI1) == 15
        assert len(PI1.edges) == 20
        assert PI1.has_edge('x', 'y') and PI1.has_edge('y', 'z')

    def test_pi_without_subdivision_has_triangles(self):
        with pytest.raises(BadParams):
            generate('pi', branches=0)

    def test_mobius(self, M4):
        assert len(M4) == 8
        assert len(M4.edges) == 12
        assert all(M4.has_edge(f"v{i}", f"v{i + 4}") for i in range(4))

    def test_petersen(self, petersen):
        assert (len(petersen), len(petersen.edges)) == (10, 15)

    def test_branch_counts(self):
        graph, embedding = generate_with_embedding('k33_subdiv', branches={'ax': 2})
        assert len(graph) == 8
        assert embedding.branch('ax') == ('a', 'ax1', 'ax2', 'x')

    def test_fig5_right_single_edges_are_fixed(self):
        with pytest.raises(BadParams):
            generate('fig5_right', branches={'ay': 1})

    @pytest.mark.parametrize('family, params', [
        ('mobius', {'n': 2}),
        ('cycle', {'m': 3}),
        ('hypercube', {}),
        ('theta', {'lengths': (1, 1, 2)}),
        ('k33_subdiv', {'branches': {'aq': 1}}),
    ])
    def test_bad_params(self, family, params):
        with pytest.raises(BadParams):
            generate(family, **params)


class TestDocuments:

    def test_certificate_round_trip(self, K5S1):
        text = emit_document(reduce(K5S1))
        document = parse_document(text)
        assert document.kind == 'reduction'
        assert emit_document(document) == text
        assert verify_document(document).ok

    def test_classification_round_trip(self, M4):
        text = emit_document(classify(M4))
        document = parse_document(text)
        assert emit_document(document) == text
        assert emit_document(document.content()) == text
        assert verify_document(document).ok

    def test_classification_notes_survive(self, PI1):
        report = classify(PI1)
        document = parse_document(emit_document(report))
        assert document.content().notes == report.notes

    def test_witness_needs_graph(self, PI1, PI1_embedding):
        witness = pi_witness(PI1, PI1_embedding)
        with pytest.raises(ValidationError):
            emit_document(witness)
        document = parse_document(emit_document(witness, input_graph=PI1))
        assert document.graph() == PI1
        assert verify_document(document).ok

    def test_unknown_kind(self, K33S1):
        data = json.loads(emit_document(reduce(K33S1)))
        data['kind'] = 'proof'
        with pytest.raises(ValidationError):
            parse_document(json.dumps(data))

    def test_schema_version(self, K33S1):
        data = json.loads(emit_document(reduce(K33S1)))
        data['schema_version'] = '2'
        with pytest.raises(SchemaVersionMismatch):
            parse_document(json.dumps(data))

    def test_unknown_field(self, K33S1):
        data = json.loads(emit_document(reduce(K33S1)))
        data['comment'] = 'hand edited'
        with pytest.raises(ValidationError):
            parse_document(json.dumps(data))

    def test_graph_mismatch(self, K33S1, C6):
        data = json.loads(emit_document(reduce(K33S1)))
        data['input_graph'] = C6.to_dict()
        is_valid, errors = DocumentValidator(strict_mode=False).validate(data)
        assert not is_valid
        assert errors == ["Payload graph differs from the embedded input graph"]

    def test_not_json(self):
        with pytest.raises(ValidationError):
            parse_document("{not json")

    def test_tampered_certificate_fails_verification(self, K5S1):
        data = json.loads(emit_document(reduce(K5S1)))
        data['payload']['doubling_sequence'] = []
        result = verify_document(parse_document(json.dumps(data)))
        assert not result.ok
        assert any("doubling sequence" in d for d in result.diagnostics)

    def test_wrap_rejects_other_objects(self):
        with pytest.raises(ValidationError):
            CertificateDocument.wrap({'edges': []})
