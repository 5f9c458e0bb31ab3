"""
Graph loader for the RACG boundary toolkit.
Reads defining graphs from edge lists, a strict DOT subset, and JSON.
"""

import json
import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from src.config.settings import FORMAT_EXTENSIONS, LABEL_PATTERN, SUPPORTED_GRAPH_FORMATS
from src.graph.core import SimplicialGraph
from src.utils.errors import DuplicateEdge, ParseError, SelfLoop
from src.utils.helpers import edge_key

logger = logging.getLogger(__name__)

_LABEL = re.compile(LABEL_PATTERN)

_DOT_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>//[^\n]*|/\*.*?\*/)
  | (?P<arrow>->)
  | (?P<edge>--)
  | (?P<punct>[{};,=\[\]])
  | (?P<id>"[^"\n]*"|[A-Za-z0-9_#'.]+)
""", re.VERBOSE | re.DOTALL)

Position = Tuple[int, int]


class _GraphBuilder:
    """Collects vertices and edges, rejecting loops and repeats with their position."""

    def __init__(self):
        self.vertices: Dict[str, None] = {}
        self.edges: List[Tuple[str, str]] = []
        self._seen = set()

    def vertex(self, label: str, pos: Position):
        if not _LABEL.fullmatch(label):
            raise ParseError(f"Invalid vertex label {label!r}", *pos)
        self.vertices.setdefault(label, None)

    def edge(self, u: str, w: str, pos: Position):
        self.vertex(u, pos)
        self.vertex(w, pos)
        if u == w:
            raise SelfLoop(f"Self-loop at '{u}'", *pos)
        key = edge_key(u, w)
        if key in self._seen:
            raise DuplicateEdge(f"Duplicate edge {key[0]}-{key[1]}", *pos)
        self._seen.add(key)
        self.edges.append(key)

    def build(self) -> SimplicialGraph:
        return SimplicialGraph(self.vertices, self.edges)


class GraphLoader:
    """
    Parser for the supported graph formats.
    """

    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)

    def load(self, filepath: Union[str, Path], fmt: Optional[str] = None) -> SimplicialGraph:
        """
        Load a graph from file.

        Args:
            filepath: Path to input file
            fmt: Format name; inferred from the extension when omitted

        Returns:
            SimplicialGraph

        Raises:
            FileNotFoundError: If the file doesn't exist
            ParseError: On unsupported formats or malformed content
        """
        filepath = Path(filepath)
        if not filepath.exists():
            raise FileNotFoundError(f"Input file not found: {filepath}")

        if fmt is None:
            fmt = FORMAT_EXTENSIONS.get(filepath.suffix.lower())
            if fmt is None:
                raise ParseError(
                    f"Cannot infer the format of '{filepath.name}'. "
                    f"Known extensions: {sorted(FORMAT_EXTENSIONS)}"
                )

        self.logger.info(f"Loading {fmt} graph from {filepath}")
        graph = self.parse(filepath.read_text(encoding='utf-8'), fmt)
        self.logger.info(f"Loaded {graph!r}")
        return graph

    def parse(self, text: str, fmt: str = 'edgelist') -> SimplicialGraph:
        """
        Parse graph text.

        Raises:
            ParseError: Malformed text or unsupported format (with line/column)
            SelfLoop: An edge joins a vertex to itself
            DuplicateEdge: An unordered pair appears twice
        """
        if fmt not in SUPPORTED_GRAPH_FORMATS:
            raise ParseError(f"Unsupported format: {fmt}. Supported formats: {SUPPORTED_GRAPH_FORMATS}")
        parser = {
            'edgelist': self._parse_edgelist,
            'dot': self._parse_dot,
            'json': self._parse_json,
        }[fmt]
        return parser(text)

    # ------------------------------------------------------------------
    # Edge list
    # ------------------------------------------------------------------

    def _parse_edgelist(self, text: str) -> SimplicialGraph:
        """
        One "u w" pair per line; a lone label declares a vertex. A token
        starting with '#' comments out the rest of the line.
        """
        builder = _GraphBuilder()
        for number, line in enumerate(text.splitlines(), start=1):
            tokens = []
            for match in re.finditer(r'\S+', line):
                if match.group().startswith('#'):
                    break
                tokens.append((match.group(), (number, match.start() + 1)))
            if not tokens:
                continue
            if len(tokens) > 2:
                raise ParseError("Expected at most two labels per line", *tokens[2][1])
            if len(tokens) == 1:
                builder.vertex(*tokens[0])
            else:
                (u, pos), (w, _) = tokens
                builder.vertex(u, pos)
                builder.vertex(w, tokens[1][1])
                builder.edge(u, w, pos)
        return builder.build()

    # ------------------------------------------------------------------
    # DOT subset
    # ------------------------------------------------------------------

    def _dot_tokens(self, text: str) -> List[Tuple[str, str, Position]]:
        tokens = []
        line, line_start, index = 1, 0, 0
        while index < len(text):
            match = _DOT_TOKEN.match(text, index)
            pos = (line, index - line_start + 1)
            if match is None:
                raise ParseError(f"Unexpected character {text[index]!r}", *pos)
            kind = match.lastgroup
            value = match.group()
            if kind not in ('ws', 'comment'):
                tokens.append((kind, value, pos))
            newlines = value.count('\n')
            if newlines:
                line += newlines
                line_start = match.start() + value.rindex('\n') + 1
            index = match.end()
        return tokens

    def _parse_dot(self, text: str) -> SimplicialGraph:
        """
        Undirected 'graph { a -- b; }' with optional name, node statements,
        edge chains and ignored attribute lists. Directed graphs and
        subgraphs are rejected.
        """
        tokens = self._dot_tokens(text)
        builder = _GraphBuilder()
        end_pos = (text.count('\n') + 1, 1)
        i = 0

        def peek(offset: int = 0):
            return tokens[i + offset] if i + offset < len(tokens) else ('eof', '', end_pos)

        def expect(kind: str, value: Optional[str] = None):
            nonlocal i
            token = peek()
            if token[0] != kind or (value is not None and token[1] != value):
                raise ParseError(f"Expected {value or kind}, found {token[1] or 'end of input'!r}", *token[2])
            i += 1
            return token

        def skip_attributes():
            nonlocal i
            while peek()[0] == 'punct' and peek()[1] == '[':
                while not (peek()[0] == 'punct' and peek()[1] == ']'):
                    if peek()[0] == 'eof':
                        raise ParseError("Unclosed attribute list", *peek()[2])
                    i += 1
                i += 1

        def label(token) -> str:
            value = token[1]
            return value[1:-1] if value.startswith('"') else value

        if peek()[0] == 'id' and peek()[1] == 'strict':
            i += 1
        head = expect('id')
        if head[1] == 'digraph':
            raise ParseError("Directed graphs are not supported", *head[2])
        if head[1] != 'graph':
            raise ParseError(f"Expected 'graph', found {head[1]!r}", *head[2])
        if peek()[0] == 'id':
            i += 1
        expect('punct', '{')

        while not (peek()[0] == 'punct' and peek()[1] == '}'):
            token = peek()
            if token[0] == 'eof':
                raise ParseError("Missing closing '}'", *token[2])
            if token[0] == 'punct' and token[1] in ';,':
                i += 1
                continue
            if token[0] != 'id':
                raise ParseError(f"Unexpected {token[1]!r}", *token[2])
            if token[1] == 'subgraph':
                raise ParseError("Subgraphs are not supported", *token[2])
            if token[1] in ('graph', 'node', 'edge') and peek(1)[1] == '[':
                i += 1
                skip_attributes()
                continue
            if peek(1)[0] == 'punct' and peek(1)[1] == '=':
                i += 3
                continue

            i += 1
            current = label(token)
            builder.vertex(current, token[2])
            skip_attributes()
            while peek()[0] in ('edge', 'arrow'):
                connector = peek()
                if connector[0] == 'arrow':
                    raise ParseError("Directed edge '->' in an undirected graph", *connector[2])
                i += 1
                target = expect('id')
                builder.edge(current, label(target), connector[2])
                current = label(target)
            skip_attributes()

        i += 1
        if peek()[0] != 'eof':
            raise ParseError(f"Unexpected {peek()[1]!r} after the graph body", *peek()[2])
        return builder.build()

    # ------------------------------------------------------------------
    # JSON
    # ------------------------------------------------------------------

    def _parse_json(self, text: str) -> SimplicialGraph:
        """{"vertices": [...], "edges": [["u", "w"], ...]}"""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"Invalid JSON: {e.msg}", e.lineno, e.colno) from None

        if not isinstance(data, dict) or not isinstance(data.get('edges'), list):
            raise ParseError("JSON graph must be an object with an 'edges' list")
        vertices = data.get('vertices', [])
        if not isinstance(vertices, list):
            raise ParseError("'vertices' must be a list")

        builder = _GraphBuilder()
        declared = set()
        for v in vertices:
            if not isinstance(v, str):
                raise ParseError(f"Vertex labels must be strings, got {v!r}")
            builder.vertex(v, (None, None))
            declared.add(v)
        for k, edge in enumerate(data['edges']):
            if not (isinstance(edge, list) and len(edge) == 2 and all(isinstance(s, str) for s in edge)):
                raise ParseError(f"Edge {k} must be a pair of labels, got {edge!r}")
            if 'vertices' in data:
                unknown = [s for s in edge if s not in declared]
                if unknown:
                    raise ParseError(f"Edge {k} uses unknown vertex {unknown[0]!r}")
            builder.edge(edge[0], edge[1], (None, None))
        return builder.build()


# ============================================================================
# WRITING
# ============================================================================

def format_graph(graph: SimplicialGraph, fmt: str = 'edgelist') -> str:
    """
    Render a graph in one of the supported formats; parse_graph reads it back.
    """
    if fmt == 'json':
        return json.dumps(graph.to_dict(), indent=2, sort_keys=True) + "\n"
    used = {v for e in graph.edges for v in e}
    isolated = [v for v in graph.vertices if v not in used]
    if fmt == 'dot':
        body = [f'  "{v}";' for v in isolated] + [f'  "{u}" -- "{w}";' for u, w in graph.edges]
        return "graph {\n" + "\n".join(body) + ("\n" if body else "") + "}\n"
    if fmt == 'edgelist':
        return "".join(f"{v}\n" for v in isolated) + "".join(f"{u} {w}\n" for u, w in graph.edges)
    raise ParseError(f"Unsupported format: {fmt}. Supported formats: {SUPPORTED_GRAPH_FORMATS}")


# ============================================================================
# CONVENIENCE FUNCTIONS
# ============================================================================

def parse_graph(text: str, fmt: str = 'edgelist') -> SimplicialGraph:
    """
    Example:
        >>> parse_graph("a b\\nb c").edges
        (('a', 'b'), ('b', 'c'))
    """
    return GraphLoader().parse(text, fmt)


def load_graph(filepath: Union[str, Path], fmt: Optional[str] = None) -> SimplicialGraph:
    return GraphLoader().load(filepath, fmt)
