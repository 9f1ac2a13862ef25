"""Tests for CLI commands"""

import io
import json
import logging
from unittest.mock import patch

import pytest

from ehig_kit.cli.main import create_parser, main, setup_logging
from ehig_kit.graphs import format_graph, parse_graph
from tests.conftest import FIG2_DUMP

CLAW_CERTIFICATE = "verdict ehig\nhit 1 : a\nhit 4 : b u\nhit 7 : c\n"
STAR_CERTIFICATE = "verdict not-ehig\nwitness-path u\nwitness-indep w1 w2 w3 w4\n"


@pytest.mark.cli
class TestCLIParser:
    """Argument parsing"""

    def test_subcommands(self):
        """Every subcommand parses its main options"""
        parser = create_parser()
        args = parser.parse_args(["recognize", "g.txt", "--reverse", "--path-cap", "4"])
        assert (args.command, args.input, args.reverse, args.path_cap) == (
            "recognize",
            "g.txt",
            True,
            4,
        )
        args = parser.parse_args(["model", "--fixture", "fig2", "--kind", "subtree"])
        assert args.kind == "subtree"
        args = parser.parse_args(["oracle", "--cases", "3"])
        assert args.kind == "decision"

    def test_unset_flags_are_none(self):
        """Flags left out do not override settings"""
        args = create_parser().parse_args(["recognize", "-"])
        assert args.json is None
        assert args.skip_twin_reduction is None

    def test_usage_errors(self, capsys):
        """Usage errors and a missing command exit with 2"""
        assert main(["recognize", "--bogus"]) == 2
        assert main(["model", "--fixture", "fig2"]) == 2
        assert main([]) == 2
        capsys.readouterr()

    def test_verbose_logging(self):
        """-v turns on debug logging for the package only"""
        try:
            setup_logging(verbose=True)
            assert logging.getLogger("ehig_kit").level == logging.DEBUG
            assert logging.getLogger().level == logging.WARNING
        finally:
            logging.getLogger("ehig_kit").setLevel(logging.NOTSET)


@pytest.mark.cli
class TestRecognizeCommand:
    """recognize, canonical and witness"""

    def test_ehig_fixture(self, capsys):
        """The claw is exactly hittable"""
        assert main(["recognize", "--fixture", "fig4-k13"]) == 0
        assert capsys.readouterr().out == CLAW_CERTIFICATE

    def test_not_ehig_fixture(self, capsys):
        """K_{1,4} exits with 1 and its witness"""
        assert main(["recognize", "--fixture", "fig1i"]) == 1
        assert capsys.readouterr().out == STAR_CERTIFICATE

    def test_stdin(self, capsys, claw_graph):
        """- reads the graph from standard input"""
        with patch("sys.stdin", io.StringIO(format_graph(claw_graph))):
            assert main(["recognize", "-"]) == 0
        assert capsys.readouterr().out == CLAW_CERTIFICATE

    def test_file_and_json(self, capsys, write_text, star_graph):
        """--json prints the certificate document"""
        path = write_text("star.txt", format_graph(star_graph))
        assert main(["recognize", path, "--json"]) == 1
        payload = json.loads(capsys.readouterr().out)
        assert payload["verdict"] == "not-ehig"
        assert payload["witness_independent"] == ["w1", "w2", "w3", "w4"]

    def test_config_file(self, capsys, settings_file):
        """Settings files select the output format"""
        assert main(["--config", settings_file, "recognize", "--fixture", "fig2"]) == 0
        assert json.loads(capsys.readouterr().out)["verdict"] == "ehig"

    def test_output_file(self, capsys, tmp_path):
        """--output writes the report and names it on stderr"""
        target = tmp_path / "out" / "cert.txt"
        assert main(["recognize", "--fixture", "fig4-k13", "--output", str(target)]) == 0
        assert target.read_text() == CLAW_CERTIFICATE
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Recognition certificate saved to" in captured.err

    def test_not_interval(self, capsys, write_text, cycle4_graph):
        """Non-interval input exits with 2"""
        path = write_text("c4.txt", format_graph(cycle4_graph))
        assert main(["recognize", path]) == 2
        assert "Error recognizing graph" in capsys.readouterr().err

    def test_input_errors(self, capsys, write_text, tmp_path):
        """Parse errors, missing files and missing input exit with 2"""
        path = write_text("bad.txt", "graph 1 1\ne a a\n")
        assert main(["recognize", path]) == 2
        assert "line 2, column 5" in capsys.readouterr().err
        assert main(["recognize", str(tmp_path / "missing.txt")]) == 2
        assert "cannot read" in capsys.readouterr().err
        assert main(["recognize"]) == 2
        assert "no input given" in capsys.readouterr().err

    def test_skip_twin_reduction(self, capsys, write_text):
        """Twins without reduction are a contract error"""
        path = write_text("k2.txt", "graph 2 1\ne a b\n")
        assert main(["recognize", path]) == 0
        capsys.readouterr()
        assert main(["recognize", path, "--skip-twin-reduction"]) == 2
        assert "Error recognizing graph" in capsys.readouterr().err

    def test_canonical(self, capsys):
        """The canonical dump of the six-vertex example"""
        assert main(["canonical", "--fixture", "fig2"]) == 0
        assert capsys.readouterr().out == FIG2_DUMP

    def test_canonical_reversed(self, capsys):
        """The reversed dump has the same size"""
        assert main(["canonical", "--fixture", "fig2", "--reverse"]) == 0
        assert capsys.readouterr().out.startswith("ihg 11 6\n")

    def test_witness(self, capsys):
        """The edge witness of the second forbidden fixture"""
        assert main(["witness", "--fixture", "fig1ii"]) == 0
        assert capsys.readouterr().out == (
            "witness-path a b\nwitness-indep c d u e f\n"
        )

    def test_witness_none(self, capsys):
        """No witness in an exactly hittable graph"""
        assert main(["witness", "--fixture", "fig2", "--path-cap", "2"]) == 1
        assert capsys.readouterr().out == (
            "witness none\n# no forbidden witness with at most 2 path vertices\n"
        )


@pytest.mark.cli
class TestHypergraphCommands:
    """hittable and mmsc"""

    def test_hittable(self, capsys):
        """The claw model has the exact set 1, 3, 5"""
        assert main(["hittable", "--hypergraph-fixture", "fig4-model"]) == 0
        assert capsys.readouterr().out == "exactly-hittable yes\npoints 1 3 5\n"

    def test_mmsc(self, capsys, write_text):
        """A long interval over three singletons needs k = 3"""
        path = write_text(
            "nested.ihg", "ihg 10 4\ni L 1 10\ni x 1 1\ni y 3 3\ni z 5 5\n"
        )
        assert main(["mmsc", path]) == 1
        assert capsys.readouterr().out.startswith("k 3\npoints ")
        assert main(["hittable", path]) == 1
        assert capsys.readouterr().out == "exactly-hittable no\n"

    def test_bad_hypergraph(self, capsys, write_text):
        """Endpoint errors exit with 2"""
        path = write_text("bad.ihg", "ihg 3 1\ni a 3 1\n")
        assert main(["mmsc", path]) == 2
        assert "endpoint-order" in capsys.readouterr().err


@pytest.mark.cli
class TestModelAndGenerateCommands:
    """model, gen and oracle"""

    def test_harary(self, capsys, write_text, path3_graph):
        """Set-system dump of P3"""
        path = write_text("p3.txt", format_graph(path3_graph))
        assert main(["model", path, "--kind", "harary"]) == 0
        assert capsys.readouterr().out.endswith("hitting : a b c\n")

    def test_subtree_refuses_non_chordal(self, capsys, write_text, cycle4_graph):
        """C4 has no subtree model"""
        path = write_text("c4.txt", format_graph(cycle4_graph))
        assert main(["model", path, "--kind", "subtree"]) == 2
        assert "Error building model" in capsys.readouterr().err

    def test_gen_reproducible(self, capsys):
        """The same seed prints the same graph"""
        command = ["gen", "--family", "random-interval", "--size", "6", "--seed", "3"]
        assert main(command) == 0
        first = capsys.readouterr().out
        assert main(command) == 0
        assert capsys.readouterr().out == first
        assert parse_graph(first).n == 6

    def test_gen_fixture(self, capsys, fig2_graph):
        """paper-fixture prints the fixture"""
        assert main(["gen", "--family", "paper-fixture", "--fixture", "fig2"]) == 0
        assert parse_graph(capsys.readouterr().out) == fig2_graph

    def test_gen_pipes_into_recognize(self, capsys):
        """Generated graphs feed recognize through stdin"""
        assert main(["gen", "--family", "random-interval", "--size", "7"]) == 0
        text = capsys.readouterr().out
        with patch("sys.stdin", io.StringIO(text)):
            assert main(["recognize", "-"]) in (0, 1)

    def test_gen_output(self, capsys, tmp_path):
        """--output writes the generated text"""
        target = tmp_path / "h.ihg"
        command = ["gen", "--family", "random-hypergraph", "--output", str(target)]
        assert main(command) == 0
        assert target.read_text().startswith("ihg 8 ")
        assert "Output saved to" in capsys.readouterr().err

    def test_gen_bad_size(self, capsys):
        """Size 0 is rejected"""
        assert main(["gen", "--family", "random-graph", "--size", "0"]) == 2
        assert "Error generating" in capsys.readouterr().err

    def test_oracle(self, capsys):
        """A short mmsc run passes"""
        assert main(["oracle", "--cases", "5", "--kind", "mmsc", "--size", "8"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "oracle mmsc cases=5 seed=0"
        assert lines[1:3] == ["agree 5", "disagree 0"]

    def test_oracle_bad_cases(self, capsys):
        """--cases must be positive"""
        assert main(["oracle", "--cases", "0"]) == 2
        assert "must be positive" in capsys.readouterr().err


@pytest.mark.cli
class TestValidateConfigCommand:
    """validate-config"""

    def test_valid(self, capsys, settings_file):
        """A valid file exits with 0"""
        assert main(["validate-config", settings_file]) == 0
        assert "Configuration is valid!" in capsys.readouterr().out

    def test_invalid(self, capsys, write_text):
        """Errors are listed and the exit code is 1"""
        path = write_text("bad.yaml", "output:\n  format: xml\nextra: {}\n")
        assert main(["validate-config", path]) == 1
        out = capsys.readouterr().out
        assert "Validation errors:" in out
        assert "  - Invalid output format: xml" in out
        assert "  - Unknown configuration section: extra" in out

    def test_missing(self, capsys, tmp_path):
        """Unreadable paths exit with 2"""
        assert main(["validate-config", str(tmp_path / "none.yaml")]) == 2
        assert "Error loading configuration" in capsys.readouterr().err
