"""
Command-line interface for the RACG boundary toolkit.

Reports go to stdout, diagnostics and logs to stderr. Exit codes:
0 verdict produced, 1 input error, 2 budget exceeded or reduction stalled, 3 verification failed.
"""

import argparse
import json
import logging
import sys
from typing import Dict, List, Optional

import colorama

from src.classifier import BoundaryClassifier
from src.config.settings import (
    EXIT_BUDGET_EXCEEDED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    GENERATOR_FAMILIES,
    LOG_FILE,
    LOG_LEVEL,
    SEARCH_BUDGET,
    SUPPORTED_GRAPH_FORMATS,
)
from src.config.strategies import FlatsStrategy
from src.graph import SimplicialGraph, double
from src.io import emit_document, format_graph, generate, load_graph, parse_document, verify_document
from src.reduction import ReductionEngine, verify_certificate
from src.reporting import ReportFormatter
from src.search import PatternId, SubdivisionSearch, find_planar_double, is_planar
from src.utils.errors import (
    BadParams,
    DeadlineExceeded,
    GraphTooLarge,
    InvalidEmbedding,
    PatternMismatch,
    RacgError,
    ReductionStalled,
)
from src.utils.helpers import setup_logging
from src.witnesses import WitnessBuilder, obstruction_check, theta_from_k33, verify_witness

logger = logging.getLogger(__name__)

WITNESS_PATTERNS = ['theta', 'k33', 'fig5_right', 'pi']


# ============================================================================
# ARGUMENTS
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--log-level', default=LOG_LEVEL, choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    common.add_argument('--no-color', action='store_true', help="Plain text output")
    common.add_argument('--progress', action='store_true', help="Show progress bars")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument('--budget', type=int, default=SEARCH_BUDGET, help="Vertex budget for exact searches")
    search.add_argument('--format', dest='fmt', choices=SUPPORTED_GRAPH_FORMATS,
                        help="Input format (inferred from the extension by default)")
    search.add_argument('--json', action='store_true', help="Emit a JSON document instead of text")

    parser = argparse.ArgumentParser(
        prog='racg-boundary',
        description="Boundary classification for right-angled Coxeter groups",
    )
    commands = parser.add_subparsers(dest='command', required=True)

    analyze = commands.add_parser('analyze', parents=[common, search], help="Full classification report")
    analyze.add_argument('file')
    analyze.add_argument('--flats', choices=[s.value for s in FlatsStrategy], help="Isolated-flats criterion")
    analyze.add_argument('--deadline', type=float, help="Seconds allowed for the reduction")

    reduce = commands.add_parser('reduce', parents=[common, search], help="Reduction certificate")
    reduce.add_argument('file')
    reduce.add_argument('--deadline', type=float, help="Seconds allowed for the reduction")

    verify = commands.add_parser('verify', parents=[common], help="Check a JSON document independently")
    verify.add_argument('document')

    planarity = commands.add_parser('planarity', parents=[common, search], help="Planarity with Kuratowski witness")
    planarity.add_argument('file')
    planarity.add_argument('--doubles', action='store_true', help="Also look for a single double that is planar")

    gen = commands.add_parser('gen', parents=[common], help="Generate a named graph")
    gen.add_argument('family', choices=GENERATOR_FAMILIES)
    gen.add_argument('params', nargs='*', help="Integers, or branch=count pairs for subdivided families")
    gen.add_argument('--format', dest='out_fmt', choices=SUPPORTED_GRAPH_FORMATS, default='edgelist')

    witness = commands.add_parser('witness', parents=[common, search], help="Symbolic boundary witness")
    witness.add_argument('file')
    witness.add_argument('--pattern', required=True, choices=WITNESS_PATTERNS)

    doubled = commands.add_parser('double', parents=[common], help="Print the double of a graph over a vertex")
    doubled.add_argument('file')
    doubled.add_argument('vertex')
    doubled.add_argument('--format', dest='fmt', choices=SUPPORTED_GRAPH_FORMATS,
                         help="Input format (inferred from the extension by default)")
    doubled.add_argument('--output-format', dest='out_fmt', choices=SUPPORTED_GRAPH_FORMATS, default='edgelist')

    return parser


def generator_params(family: str, tokens: List[str]) -> Dict[str, object]:
    """
    Map gen's positional parameters onto generate() keywords.

    Raises:
        BadParams: On malformed or misplaced parameters
    """
    pairs = [t for t in tokens if '=' in t]
    try:
        numbers = [int(t) for t in tokens if '=' not in t]
        counts = {k: int(v) for k, v in (t.split('=', 1) for t in pairs)}
    except ValueError:
        raise BadParams(f"Parameters must be integers or branch=count pairs, got {tokens}") from None

    if family in ('cycle', 'path', 'mobius'):
        if len(numbers) != 1 or counts:
            raise BadParams(f"{family} takes one integer n")
        return {'n': numbers[0]}
    if family == 'theta':
        if counts:
            raise BadParams("theta takes three branch lengths")
        return {'lengths': numbers} if numbers else {}
    if family == 'petersen':
        if tokens:
            raise BadParams("petersen takes no parameters")
        return {}
    if numbers and counts:
        raise BadParams("Give either one count for every branch or branch=count pairs")
    if len(numbers) > 1:
        raise BadParams(f"{family} takes one count for every branch, got {numbers}")
    if numbers:
        return {'branches': numbers[0]}
    return {'branches': counts} if counts else {}


# ============================================================================
# COMMANDS
# ============================================================================

class CommandRunner:
    """Executes one parsed command and returns its exit code."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.formatter = ReportFormatter(color=not args.no_color and sys.stdout.isatty())
        self.logger = logging.getLogger(self.__class__.__name__)

    def run(self) -> int:
        handler = getattr(self, f"cmd_{self.args.command}")
        return handler()

    def _load(self) -> SimplicialGraph:
        return load_graph(self.args.file, self.args.fmt)

    def cmd_analyze(self) -> int:
        graph = self._load()
        classifier = BoundaryClassifier(
            budget=self.args.budget,
            flats_strategy=self.args.flats,
            deadline_seconds=self.args.deadline,
            show_progress=self.args.progress,
        )
        report = classifier.classify(graph)
        print(emit_document(report) if self.args.json else self.formatter.format_report(report), end='')

        if report.reduction_skipped:
            return EXIT_BUDGET_EXCEEDED
        if report.reduction_verified is False:
            return EXIT_VERIFICATION_FAILED
        return EXIT_OK

    def cmd_reduce(self) -> int:
        graph = self._load()
        engine = ReductionEngine(
            budget=self.args.budget, deadline_seconds=self.args.deadline, show_progress=self.args.progress
        )
        certificate = engine.reduce(graph)
        result = verify_certificate(certificate)
        if self.args.json:
            print(emit_document(certificate), end='')
        else:
            print(self.formatter.format_certificate(certificate, result), end='')
        return EXIT_OK if result.ok else EXIT_VERIFICATION_FAILED

    def cmd_verify(self) -> int:
        with open(self.args.document, encoding='utf-8') as handle:
            document = parse_document(handle.read())
        result = verify_document(document)
        status = self.formatter.status(result.ok)
        print(f"{document.kind} document: {status}")
        for diagnostic in result.diagnostics:
            print(f"  - {diagnostic}")
        return EXIT_OK if result.ok else EXIT_VERIFICATION_FAILED

    def cmd_planarity(self) -> int:
        graph = self._load()
        planar, kuratowski = is_planar(graph)
        planar_double = None
        if self.args.doubles and not planar:
            planar_double = find_planar_double(graph)

        if self.args.json:
            data = {
                'planar': planar,
                'kuratowski': kuratowski.to_dict() if kuratowski else None,
                'planar_double': planar_double,
            }
            print(json.dumps(data, indent=2, sort_keys=True))
        else:
            print(self.formatter.format_planarity(
                graph, planar, kuratowski, planar_double, probed=self.args.doubles and not planar
            ), end='')
        return EXIT_OK

    def cmd_gen(self) -> int:
        params = generator_params(self.args.family, self.args.params)
        graph = generate(self.args.family, **params)
        print(format_graph(graph, self.args.out_fmt), end='')
        return EXIT_OK

    def cmd_double(self) -> int:
        graph = self._load()
        result = double(graph, self.args.vertex)
        print(format_graph(result.graph, self.args.out_fmt), end='')
        return EXIT_OK

    def cmd_witness(self) -> int:
        graph = self._load()
        builder = WitnessBuilder(graph)
        witness = self._build_witness(graph, builder)
        result = verify_witness(witness, graph)
        obstruction = obstruction_check(witness) if self.args.pattern == 'pi' else None

        if self.args.json:
            print(emit_document(witness, input_graph=graph), end='')
        else:
            print(self.formatter.format_witness(witness, result, obstruction), end='')
        return EXIT_OK if result.ok else EXIT_VERIFICATION_FAILED

    def _build_witness(self, graph: SimplicialGraph, builder: WitnessBuilder):
        search = SubdivisionSearch(graph, budget=self.args.budget, show_progress=self.args.progress)
        pattern = self.args.pattern

        if pattern == 'theta':
            embedding = search.find(PatternId.THETA)
            if embedding is None:
                raise PatternMismatch("Graph contains no Theta subdivision")
            try:
                return builder.theta(embedding)
            except InvalidEmbedding as first:
                k33 = search.find(PatternId.K33, max_bad=0)
                if k33 is None:
                    raise first
                self.logger.info(f"First Theta unusable ({first}); using one inside an induced K33")
                return builder.theta(theta_from_k33(k33))

        target, build = {
            'k33': (PatternId.K33, builder.k33),
            'fig5_right': (PatternId.FIG5_RIGHT, builder.fig5_right),
            'pi': (PatternId.FIG5_LEFT, builder.pi),
        }[pattern]
        embedding = search.find(target, max_bad=0)
        if embedding is None:
            raise PatternMismatch(f"Graph contains no induced {target.value} subdivision")
        return build(embedding)


# ============================================================================
# ENTRY POINT
# ============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    setup_logging(args.log_level, LOG_FILE)
    colorama.just_fix_windows_console()

    try:
        return CommandRunner(args).run()
    except (GraphTooLarge, DeadlineExceeded, ReductionStalled) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET_EXCEEDED
    except (RacgError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
