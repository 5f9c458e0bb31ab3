"""
Versioned JSON documents wrapping certificates, reports and witnesses.

A document embeds the input graph verbatim next to the payload, so it can
be re-checked on its own. Output uses sorted keys and fixed indentation,
which makes emit(parse(emit(x))) byte-identical to emit(x).
"""

import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from src.classifier.classifier import ClassificationReport
from src.config.settings import DOCUMENT_KINDS, SCHEMA_VERSION
from src.graph.core import SimplicialGraph
from src.reduction.certificate import ReductionCertificate, VerificationResult, verify_certificate
from src.utils.errors import SchemaVersionMismatch, ValidationError
from src.witnesses.model import JoinOfCantorSets, SymbolicWitness, witness_from_dict
from src.witnesses.verify import verify_witness
from src.io.serialization import (
    certificate_from_dict,
    certificate_to_dict,
    graph_from_dict,
    report_from_dict,
    report_to_dict,
)

logger = logging.getLogger(__name__)

REQUIRED_FIELDS = ['schema_version', 'kind', 'payload', 'input_graph']

Content = Union[ReductionCertificate, ClassificationReport, SymbolicWitness, JoinOfCantorSets]

_READERS = {
    'reduction': certificate_from_dict,
    'classification': report_from_dict,
    'witness': witness_from_dict,
}

assert set(_READERS) == set(DOCUMENT_KINDS)


@dataclass(frozen=True)
class CertificateDocument:
    """
    Attributes:
        schema_version: Always SCHEMA_VERSION for documents this version writes
        kind: One of DOCUMENT_KINDS
        payload: Serialized certificate, report or witness
        input_graph: Serialized graph the payload is about
    """
    schema_version: str
    kind: str
    payload: Dict[str, Any]
    input_graph: Dict[str, Any]

    @classmethod
    def wrap(cls, content: Content, input_graph: Optional[SimplicialGraph] = None) -> 'CertificateDocument':
        """
        Build a document around a certificate, report or witness.

        Args:
            content: Object to wrap
            input_graph: Graph a witness lives in (certificates and reports
                carry their own)

        Raises:
            ValidationError: Unknown content type, or a witness without a graph
        """
        if isinstance(content, ReductionCertificate):
            kind, payload, graph = 'reduction', certificate_to_dict(content), content.initial_graph
        elif isinstance(content, ClassificationReport):
            kind, payload, graph = 'classification', report_to_dict(content), content.graph
        elif isinstance(content, (SymbolicWitness, JoinOfCantorSets)):
            if input_graph is None:
                raise ValidationError("A witness document needs the graph the witness was built in")
            kind, payload, graph = 'witness', content.to_dict(), input_graph
        else:
            raise ValidationError(f"Cannot wrap {type(content).__name__} in a document")
        return cls(SCHEMA_VERSION, kind, payload, graph.to_dict())

    def graph(self) -> SimplicialGraph:
        return graph_from_dict(self.input_graph)

    def content(self) -> Content:
        """Rebuild the wrapped object."""
        return _READERS[self.kind](self.payload)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'schema_version': self.schema_version,
            'kind': self.kind,
            'payload': self.payload,
            'input_graph': self.input_graph,
        }


# ============================================================================
# VALIDATION
# ============================================================================

class DocumentValidator:
    """
    Structural checks for parsed documents.

    Soundness of a certificate or witness is not checked here; see
    verify_document.
    """

    def __init__(self, strict_mode: bool = True):
        """
        Args:
            strict_mode: If True, raise on the first failed validation
        """
        self.strict_mode = strict_mode
        self.logger = logging.getLogger(self.__class__.__name__)

    def validate(self, data: Any) -> Tuple[bool, List[str]]:
        """
        Validate a decoded document.

        Returns:
            Tuple of (is_valid, errors)

        Raises:
            SchemaVersionMismatch: strict mode, wrong schema version
            ValidationError: strict mode, any other problem
        """
        if not isinstance(data, Mapping):
            errors = [f"Document must be a JSON object, got {type(data).__name__}"]
        else:
            errors = self._validate_required_fields(data)
            if not errors:
                version_errors = self._validate_schema_version(data)
                if version_errors:
                    return self._finish(version_errors, SchemaVersionMismatch)
                errors.extend(self._validate_kind(data))
                errors.extend(self._validate_input_graph(data))
                if not errors:
                    errors.extend(self._validate_payload(data))

        return self._finish(errors, ValidationError)

    def _finish(self, errors: List[str], error_type: type) -> Tuple[bool, List[str]]:
        is_valid = not errors
        if not is_valid:
            self.logger.error(f"Document validation failed with {len(errors)} errors")
            for error in errors:
                self.logger.error(f"  - {error}")
            if self.strict_mode:
                raise error_type("Invalid document:\n" + "\n".join(errors))
        return is_valid, errors

    def _validate_required_fields(self, data: Mapping[str, Any]) -> List[str]:
        errors = [f"Missing required field '{name}'" for name in REQUIRED_FIELDS if name not in data]
        extra = sorted(set(data) - set(REQUIRED_FIELDS))
        if extra:
            errors.append(f"Unknown fields: {extra}")
        return errors

    def _validate_schema_version(self, data: Mapping[str, Any]) -> List[str]:
        if data['schema_version'] != SCHEMA_VERSION:
            return [f"Schema version {data['schema_version']!r} is not supported (expected {SCHEMA_VERSION!r})"]
        return []

    def _validate_kind(self, data: Mapping[str, Any]) -> List[str]:
        if data['kind'] not in DOCUMENT_KINDS:
            return [f"Unknown document kind: {data['kind']!r}. Supported: {DOCUMENT_KINDS}"]
        if not isinstance(data['payload'], Mapping):
            return ["Payload must be a JSON object"]
        return []

    def _validate_input_graph(self, data: Mapping[str, Any]) -> List[str]:
        try:
            graph_from_dict(data['input_graph'])
        except ValidationError as e:
            return [f"Embedded input graph: {e}"]
        return []

    def _validate_payload(self, data: Mapping[str, Any]) -> List[str]:
        """The payload must rebuild and be about the embedded graph."""
        try:
            content = _READERS[data['kind']](data['payload'])
        except ValidationError as e:
            return [f"Payload: {e}"]

        graph = graph_from_dict(data['input_graph'])
        own = None
        if isinstance(content, ReductionCertificate):
            own = content.initial_graph
        elif isinstance(content, ClassificationReport):
            own = content.graph
        if own is not None and own != graph:
            return ["Payload graph differs from the embedded input graph"]
        return []


# ============================================================================
# CONVENIENCE FUNCTIONS
# ============================================================================

def emit_document(document: Union[CertificateDocument, Content],
                  input_graph: Optional[SimplicialGraph] = None) -> str:
    """
    Serialize a document (or wrap and serialize an object) with stable ordering.

    Example:
        >>> text = emit_document(reduce(graph))
        >>> emit_document(parse_document(text)) == text
        True
    """
    if not isinstance(document, CertificateDocument):
        document = CertificateDocument.wrap(document, input_graph)
    return json.dumps(document.to_dict(), indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def parse_document(text: str) -> CertificateDocument:
    """
    Raises:
        SchemaVersionMismatch: Unsupported schema version
        ValidationError: Not JSON, or fails structural validation
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"Document is not valid JSON: line {e.lineno}, column {e.colno}: {e.msg}") from None
    DocumentValidator(strict_mode=True).validate(data)
    return CertificateDocument(
        schema_version=data['schema_version'],
        kind=data['kind'],
        payload=data['payload'],
        input_graph=data['input_graph'],
    )


def verify_document(document: CertificateDocument) -> VerificationResult:
    """
    Independent soundness check of a parsed document.

    Reduction documents replay the certificate; witness documents re-check
    the witness in the embedded graph; classification documents re-check
    their certificate and, when present, the terminal witness in the
    certificate's final graph.
    """
    content = document.content()
    if isinstance(content, ReductionCertificate):
        return verify_certificate(content)
    if isinstance(content, ClassificationReport):
        diagnostics = []
        if content.reduction is not None:
            result = verify_certificate(content.reduction)
            diagnostics.extend(result.diagnostics)
            if result.ok and content.witness is not None:
                diagnostics.extend(verify_witness(content.witness, content.reduction.final_graph).diagnostics)
        return VerificationResult(ok=not diagnostics, diagnostics=diagnostics)
    return verify_witness(content, document.graph())
