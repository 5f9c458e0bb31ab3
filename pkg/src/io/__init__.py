"""I/O package: graph parsing, graph families and certificate documents."""

from src.io.loader import GraphLoader, parse_graph, load_graph, format_graph
from src.io.generators import GraphGenerator, generate, generate_with_embedding
from src.io.serialization import (
    certificate_to_dict,
    certificate_from_dict,
    report_to_dict,
    report_from_dict,
    graph_from_dict,
)
from src.io.documents import (
    CertificateDocument,
    DocumentValidator,
    emit_document,
    parse_document,
    verify_document,
)

__all__ = [
    'GraphLoader',
    'parse_graph',
    'load_graph',
    'format_graph',
    'GraphGenerator',
    'generate',
    'generate_with_embedding',
    'certificate_to_dict',
    'certificate_from_dict',
    'report_to_dict',
    'report_from_dict',
    'graph_from_dict',
    'CertificateDocument',
    'DocumentValidator',
    'emit_document',
    'parse_document',
    'verify_document',
]
