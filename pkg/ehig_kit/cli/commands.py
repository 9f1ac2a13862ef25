"""CLI commands for the EHIG toolkit

Every handler returns the process exit code: 0 for a positive verdict or
success, 1 for a negative verdict, 2 for unusable input.
"""

import argparse
import sys
from pathlib import Path
from typing import Any

from ..canonical.stretched import build_canonical
from ..config.factory import ConfigFactory, ConfigFactoryError
from ..config.loader import ConfigLoader, merge_configs
from ..config.validator import ConfigValidator
from ..core.config import Settings
from ..core.errors import ContractError, EHIGError, GuardExceededError, InputError
from ..core.types import GeneratorFamily, ModelKind, OutputFormat
from ..ehig.recognizer import recognize
from ..ehig.witness import extract_forbidden_witness, verify_forbidden_witness
from ..generators.differential import DECISION, run_decision_oracle, run_mmsc_oracle
from ..generators.random_models import GeneratorSpec, generate
from ..graphs.formats import format_graph, parse_graph
from ..graphs.graph import Graph
from ..graphs.interval import twin_reduced_clique_path
from ..hyperkit.formats import format_hypergraph, parse_hypergraph
from ..hyperkit.hypergraph import IntervalHypergraph
from ..hyperkit.solvers import min_membership_hitting
from ..models.set_system import harary_model
from ..models.subtree import chordal_subtree_model
from ..reports.base import BaseReport
from ..reports.certificate import CertificateReport, MembershipReport, WitnessReport
from ..reports.model import ModelDumpReport
from ..reports.oracle import OracleReport
from ..templates import FixtureManager

INPUT_ERRORS = (InputError, ContractError, ConfigFactoryError, GuardExceededError)

DEFAULT_DECISION_ORACLE_SIZE = 9
DEFAULT_MMSC_ORACLE_SIZE = 15


def _overrides(args: argparse.Namespace) -> dict[str, Any]:
    """Settings keys set explicitly on the command line"""
    flags = {
        ("recognition", "skip_twin_reduction"): "skip_twin_reduction",
        ("recognition", "reverse_clique_path"): "reverse",
        ("witness", "path_cap"): "path_cap",
        ("generator", "size"): "size",
        ("generator", "seed"): "seed",
        ("generator", "edge_probability"): "edge_probability",
    }
    overrides: dict[str, Any] = {}
    for (section, key), attribute in flags.items():
        value = getattr(args, attribute, None)
        if value is not None:
            overrides.setdefault(section, {})[key] = value
    if getattr(args, "json", None):
        overrides["output"] = {"format": OutputFormat.JSON.value}
    return overrides


def _settings(args: argparse.Namespace) -> Settings:
    return ConfigFactory().create_settings(args.config, _overrides(args))


def _read_input(path: str | None) -> str:
    if path is None:
        raise InputError("no input given: pass a file, - for stdin, or a fixture")
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.fixture:
        return FixtureManager().load_graph(args.fixture)
    return parse_graph(_read_input(args.input))


def _load_hypergraph(args: argparse.Namespace) -> IntervalHypergraph:
    if args.hypergraph_fixture:
        return FixtureManager().load_hypergraph(args.hypergraph_fixture)
    return parse_hypergraph(_read_input(args.input))


def _emit(text: str, output: str | None) -> None:
    if output:
        output_path = Path(output)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(text, encoding="utf-8")
        print(f"Output saved to {output_path}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _publish(report: BaseReport, subject: Any, output: str | None) -> int:
    report_data = report.generate(subject)
    if output:
        if not report.save_report(report_data, output):
            raise InputError(f"cannot write {output}")
        print(f"{report_data.title} saved to {output}", file=sys.stderr)
    else:
        sys.stdout.write(report.format_report(report_data))
    return report_data.exit_code


def recognize_command(args: argparse.Namespace) -> int:
    """Decide exact hittability and print the certificate"""
    try:
        settings = _settings(args)
        graph = _load_graph(args)
        certificate = recognize(
            graph,
            skip_twin_reduction=settings.recognition.skip_twin_reduction,
            reverse_clique_path=settings.recognition.reverse_clique_path,
            path_cap=settings.witness.path_cap,
        )
        return _publish(
            CertificateReport(settings.output_format), certificate, args.output
        )
    except INPUT_ERRORS as e:
        print(f"Error recognizing graph: {e}", file=sys.stderr)
        return 2


def canonical_command(args: argparse.Namespace) -> int:
    """Print the canonical model of the (twin-reduced) graph"""
    try:
        settings = _settings(args)
        _, _, clique_path = twin_reduced_clique_path(
            _load_graph(args), settings.recognition.skip_twin_reduction
        )
        if settings.recognition.reverse_clique_path:
            clique_path = clique_path.reversed()
        model = build_canonical(clique_path)
        return _publish(ModelDumpReport(settings.output_format), model, args.output)
    except INPUT_ERRORS as e:
        print(f"Error building canonical model: {e}", file=sys.stderr)
        return 2


def hittable_command(args: argparse.Namespace) -> int:
    try:
        settings = _settings(args)
        result = min_membership_hitting(_load_hypergraph(args))
        report = MembershipReport(exact_only=True, output_format=settings.output_format)
        return _publish(report, result, args.output)
    except INPUT_ERRORS as e:
        print(f"Error checking hypergraph: {e}", file=sys.stderr)
        return 2


def mmsc_command(args: argparse.Namespace) -> int:
    try:
        settings = _settings(args)
        result = min_membership_hitting(_load_hypergraph(args))
        report = MembershipReport(output_format=settings.output_format)
        return _publish(report, result, args.output)
    except INPUT_ERRORS as e:
        print(f"Error solving minimum membership: {e}", file=sys.stderr)
        return 2


def witness_command(args: argparse.Namespace) -> int:
    """Search for a forbidden structure, whatever the graph's verdict"""
    try:
        settings = _settings(args)
        graph = _load_graph(args)
        reduced, _, clique_path = twin_reduced_clique_path(graph)
        witness = extract_forbidden_witness(
            reduced, clique_path, path_cap=settings.witness.path_cap
        )
        if witness is not None and not verify_forbidden_witness(graph, witness):
            witness = None
        report = WitnessReport(settings.witness.path_cap, settings.output_format)
        return _publish(report, witness, args.output)
    except INPUT_ERRORS as e:
        print(f"Error extracting witness: {e}", file=sys.stderr)
        return 2


def model_command(args: argparse.Namespace) -> int:
    try:
        settings = _settings(args)
        graph = _load_graph(args)
        if ModelKind(args.kind) is ModelKind.HARARY:
            model = harary_model(graph)
        else:
            model = chordal_subtree_model(graph)
        return _publish(ModelDumpReport(settings.output_format), model, args.output)
    except INPUT_ERRORS as e:
        print(f"Error building model: {e}", file=sys.stderr)
        return 2


def generate_command(args: argparse.Namespace) -> int:
    """Write a generated graph or hypergraph in its text format"""
    try:
        settings = _settings(args)
        spec = GeneratorSpec(
            family=GeneratorFamily(args.family),
            size=settings.generator.size,
            seed=settings.generator.seed,
            edge_probability=settings.generator.edge_probability,
            fixture=args.fixture,
        )
        generated = generate(spec)
        if isinstance(generated, IntervalHypergraph):
            _emit(format_hypergraph(generated), args.output)
        else:
            _emit(format_graph(generated), args.output)
        return 0
    except INPUT_ERRORS as e:
        print(f"Error generating: {e}", file=sys.stderr)
        return 2


def oracle_command(args: argparse.Namespace) -> int:
    """Differential run of the polynomial algorithms against brute force"""
    try:
        if args.cases < 1:
            raise InputError(f"--cases must be positive, got {args.cases}")
        settings = _settings(args)
        seed = args.seed if args.seed is not None else settings.generator.seed
        if args.kind == DECISION:
            run = run_decision_oracle(
                args.cases,
                max_size=args.size or DEFAULT_DECISION_ORACLE_SIZE,
                seed=seed,
                point_budget=settings.oracle.max_points,
            )
        else:
            run = run_mmsc_oracle(
                args.cases,
                max_size=args.size or DEFAULT_MMSC_ORACLE_SIZE,
                seed=seed,
                point_budget=settings.oracle.max_membership_points,
            )
        return _publish(OracleReport(settings.output_format), run, args.output)
    except INPUT_ERRORS as e:
        print(f"Error running oracle: {e}", file=sys.stderr)
        return 2


def validate_config_command(args: argparse.Namespace) -> int:
    """Validate a settings file merged over the defaults"""
    try:
        config = merge_configs(
            FixtureManager().default_settings(), ConfigLoader().load_config(args.path)
        )
    except (OSError, ValueError, EHIGError) as e:
        print(f"Error loading configuration: {e}", file=sys.stderr)
        return 2

    validator = ConfigValidator()
    valid = validator.validate_config(config)
    if validator.get_errors():
        print("Validation errors:")
        for error in validator.get_errors():
            print(f"  - {error}")
    if validator.get_warnings():
        print("Validation warnings:")
        for warning in validator.get_warnings():
            print(f"  - {warning}")
    if not valid:
        print(f"Configuration validation failed: {args.path}", file=sys.stderr)
        return 1
    print("Configuration is valid!")
    return 0
