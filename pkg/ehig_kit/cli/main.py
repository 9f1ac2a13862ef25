"""Main CLI entry point for the EHIG toolkit"""

import argparse
import logging
import sys

from ..core.types import GeneratorFamily, ModelKind
from ..generators.differential import DECISION, MMSC


def setup_logging(verbose: bool = False) -> None:
    """Log to standard error; standard output carries certificates and dumps"""
    logging.basicConfig(
        level=logging.WARNING,
        format="%(levelname)s: %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )
    if verbose:
        # third-party loggers stay at WARNING
        logging.getLogger("ehig_kit").setLevel(logging.DEBUG)


def _add_graph_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "input", nargs="?", help="Graph file in the 'graph' text format, or - for stdin"
    )
    parser.add_argument("--fixture", help="Use an embedded fixture graph instead")


def _add_hypergraph_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "input", nargs="?", help="Hypergraph file in the 'ihg' text format, or -"
    )
    parser.add_argument(
        "--hypergraph-fixture", help="Use an embedded fixture hypergraph instead"
    )


def _add_output(parser: argparse.ArgumentParser, json_flag: bool = True) -> None:
    parser.add_argument("--output", help="Output file (default: stdout)")
    if json_flag:
        parser.add_argument(
            "--json",
            action="store_true",
            default=None,
            help="Machine-readable JSON output",
        )


def _add_recognition_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--skip-twin-reduction",
        action="store_true",
        default=None,
        help="Do not merge vertices with identical clique ranges",
    )
    parser.add_argument(
        "--reverse",
        action="store_true",
        default=None,
        help="Use the reversed clique path",
    )


def create_parser() -> argparse.ArgumentParser:
    """Create the main argument parser"""
    parser = argparse.ArgumentParser(
        prog="ehig",
        description="Exactly hittable interval graphs: recognition and certificates",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  ehig recognize --fixture fig2
  ehig canonical graph.txt --output model.ihg
  ehig mmsc - < family.ihg
  ehig gen --family random-interval --size 7 --seed 3 | ehig recognize -
  ehig oracle --cases 200 --kind mmsc
        """,
    )

    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="Enable verbose output with debug logging",
    )
    parser.add_argument("--config", help="Settings file or directory (YAML or JSON)")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    recognize_parser = subparsers.add_parser(
        "recognize", help="Decide exact hittability and print a certificate"
    )
    _add_graph_input(recognize_parser)
    _add_recognition_flags(recognize_parser)
    recognize_parser.add_argument(
        "--path-cap", type=int, help="Path length cap of the exhaustive witness search"
    )
    _add_output(recognize_parser)

    canonical_parser = subparsers.add_parser(
        "canonical", help="Print the canonical stretched interval model"
    )
    _add_graph_input(canonical_parser)
    _add_recognition_flags(canonical_parser)
    _add_output(canonical_parser)

    hittable_parser = subparsers.add_parser(
        "hittable", help="Decide whether an interval hypergraph is exactly hittable"
    )
    _add_hypergraph_input(hittable_parser)
    _add_output(hittable_parser)

    mmsc_parser = subparsers.add_parser(
        "mmsc", help="Minimum membership hitting set of an interval hypergraph"
    )
    _add_hypergraph_input(mmsc_parser)
    _add_output(mmsc_parser)

    witness_parser = subparsers.add_parser(
        "witness", help="Search for a forbidden induced structure"
    )
    _add_graph_input(witness_parser)
    witness_parser.add_argument(
        "--path-cap", type=int, help="Path length cap of the exhaustive search"
    )
    _add_output(witness_parser)

    model_parser = subparsers.add_parser(
        "model", help="Exactly hittable set-system or subtree model of a graph"
    )
    _add_graph_input(model_parser)
    model_parser.add_argument(
        "--kind",
        required=True,
        choices=[kind.value for kind in ModelKind],
        help="harary: any graph; subtree: connected chordal graphs",
    )
    _add_output(model_parser)

    gen_parser = subparsers.add_parser("gen", help="Generate a graph or hypergraph")
    gen_parser.add_argument(
        "--family",
        required=True,
        choices=[family.value for family in GeneratorFamily],
        help="Generator family",
    )
    gen_parser.add_argument("--fixture", help="Fixture name for paper-fixture")
    gen_parser.add_argument("--size", type=int, help="Number of vertices or points")
    gen_parser.add_argument("--seed", type=int, help="Random seed")
    gen_parser.add_argument(
        "--edge-probability", type=float, help="Edge probability for random-graph"
    )
    _add_output(gen_parser, json_flag=False)

    oracle_parser = subparsers.add_parser(
        "oracle", help="Compare the polynomial algorithms with brute force"
    )
    oracle_parser.add_argument("--cases", type=int, required=True, help="Case count")
    oracle_parser.add_argument(
        "--size", type=int, help="Maximum vertices (decision) or points (mmsc)"
    )
    oracle_parser.add_argument("--seed", type=int, help="Seed of the first case")
    oracle_parser.add_argument(
        "--kind", choices=[DECISION, MMSC], default=DECISION, help="What to compare"
    )
    _add_output(oracle_parser)

    validate_parser = subparsers.add_parser(
        "validate-config", help="Validate a settings file or directory"
    )
    validate_parser.add_argument("path", help="Settings file or directory")

    return parser


def main(args: list[str] | None = None) -> int:
    """Main CLI entry point"""
    parser = create_parser()
    try:
        parsed_args = parser.parse_args(args)
    except SystemExit as e:
        # argparse usage errors are input errors
        return 0 if e.code == 0 else 2

    if not parsed_args.command:
        parser.print_help()
        return 2

    setup_logging(verbose=getattr(parsed_args, "verbose", False))

    from .commands import (
        canonical_command,
        generate_command,
        hittable_command,
        mmsc_command,
        model_command,
        oracle_command,
        recognize_command,
        validate_config_command,
        witness_command,
    )

    command_handlers = {
        "recognize": recognize_command,
        "canonical": canonical_command,
        "hittable": hittable_command,
        "mmsc": mmsc_command,
        "witness": witness_command,
        "model": model_command,
        "gen": generate_command,
        "oracle": oracle_command,
        "validate-config": validate_config_command,
    }

    handler = command_handlers.get(parsed_args.command)
    if handler:
        return handler(parsed_args)
    print(f"Unknown command: {parsed_args.command}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
