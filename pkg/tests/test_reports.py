"""Tests for report generators"""

import json

import pytest

from ehig_kit.core.types import OutputFormat
from ehig_kit.ehig import ForbiddenWitness, recognize
from ehig_kit.generators import OracleCase, OracleRun
from ehig_kit.graphs import build_graph
from ehig_kit.hyperkit import IntervalHypergraph, min_membership_hitting
from ehig_kit.models import harary_model
from ehig_kit.reports import (
    BaseReport,
    CertificateReport,
    MembershipReport,
    ModelDumpReport,
    OracleReport,
    ReportData,
    WitnessReport,
)
from tests.conftest import FIG2_DUMP


class EchoReport(BaseReport):
    def generate(self, subject):
        return ReportData(title="Echo", payload={"value": subject}, lines=[subject])


@pytest.mark.reports
class TestBaseReport:
    """Formatting and saving"""

    def test_text_and_json(self):
        """Text joins lines; JSON dumps the payload"""
        data = EchoReport().generate("hello")
        assert EchoReport().format_report(data) == "hello\n"
        json_text = EchoReport(OutputFormat.JSON).format_report(data)
        assert json.loads(json_text) == {"value": "hello"}

    def test_save_creates_parents(self, tmp_path):
        """Parent directories are created"""
        report = EchoReport()
        target = tmp_path / "nested" / "out.txt"
        assert report.save_report(report.generate("x"), str(target))
        assert target.read_text() == "x\n"

    def test_save_failure(self, tmp_path):
        """Unwritable targets return False"""
        report = EchoReport()
        assert not report.save_report(report.generate("x"), str(tmp_path))


@pytest.mark.reports
class TestCertificateReport:
    """verdict, hit and witness lines"""

    def test_ehig_text(self, claw_graph):
        """Hit lines list each point's block"""
        report = CertificateReport()
        data = report.generate(recognize(claw_graph))
        assert report.format_report(data) == (
            "verdict ehig\nhit 1 : a\nhit 4 : b u\nhit 7 : c\n"
        )
        assert data.exit_code == 0

    def test_not_ehig_text(self, star_graph):
        """Witness lines and exit code 1"""
        report = CertificateReport()
        data = report.generate(recognize(star_graph))
        assert report.format_report(data) == (
            "verdict not-ehig\nwitness-path u\nwitness-indep w1 w2 w3 w4\n"
        )
        assert data.exit_code == 1

    def test_json(self, claw_graph):
        """The JSON form carries the canonical model"""
        report = CertificateReport(OutputFormat.JSON)
        payload = json.loads(report.format_report(report.generate(recognize(claw_graph))))
        assert payload["verdict"] == "ehig"
        assert payload["hitting"] == [1, 4, 7]
        assert payload["partition"] == [["a"], ["b", "u"], ["c"]]
        assert payload["model"]["n"] == 7
        assert payload["model"]["vertex_map"]["u"] == "I_u"
        assert payload["witness_path"] is None

    def test_json_witness(self, star_graph):
        """Witness fields and their strategy"""
        payload = CertificateReport().generate(recognize(star_graph)).payload
        assert payload["witness_path"] == ["u"]
        assert payload["witness_strategy"] == "star"
        assert payload["mmsc_k"] == 2

    def test_twin_comments(self):
        """Merged twins are listed as comments"""
        graph = build_graph([("a", "b")], labels=["c"])
        data = CertificateReport().generate(recognize(graph))
        assert data.lines[-1] == "# twin b a"
        assert data.payload["merged_twins"] == {"b": "a"}


@pytest.mark.reports
class TestWitnessReport:
    """Standalone witness output"""

    def test_found(self):
        """Path and independent lines"""
        witness = ForbiddenWitness(("u",), ("w1", "w2", "w3", "w4"))
        data = WitnessReport(6).generate(witness)
        assert data.lines == ["witness-path u", "witness-indep w1 w2 w3 w4"]
        assert data.exit_code == 0
        assert data.payload["witness_strategy"] == "exhaustive"

    def test_none(self):
        """The path cap is named when nothing is found"""
        data = WitnessReport(3).generate(None)
        assert data.lines == [
            "witness none",
            "# no forbidden witness with at most 3 path vertices",
        ]
        assert data.exit_code == 1
        assert data.payload["found"] is False


@pytest.mark.reports
class TestMembershipReport:
    """hittable and mmsc output"""

    def test_exact(self, fixture_manager):
        """The claw model is exactly hittable at 1, 3, 5"""
        result = min_membership_hitting(fixture_manager.load_hypergraph("fig4-model"))
        data = MembershipReport(exact_only=True).generate(result)
        assert data.lines == ["exactly-hittable yes", "points 1 3 5"]
        assert data.payload == {"exactly_hittable": True, "points": [1, 3, 5]}
        assert data.exit_code == 0

    def test_not_exact(self):
        """One interval over three disjoint singletons"""
        hypergraph = IntervalHypergraph.create(
            10, [("L", 1, 10), ("x", 1, 1), ("y", 3, 3), ("z", 5, 5)]
        )
        result = min_membership_hitting(hypergraph)
        exact = MembershipReport(exact_only=True).generate(result)
        assert exact.lines == ["exactly-hittable no"]
        assert exact.exit_code == 1
        mmsc = MembershipReport().generate(result)
        assert mmsc.lines[0] == "k 3"
        assert mmsc.payload["k"] == 3

    def test_empty(self):
        """No intervals: k 0 and an empty point line"""
        data = MembershipReport().generate(min_membership_hitting(IntervalHypergraph(n=2)))
        assert data.lines == ["k 0", "points"]
        assert data.exit_code == 0


@pytest.mark.reports
class TestModelAndOracleReports:
    """Model dumps and oracle summaries"""

    def test_canonical_dump(self, fig2_model):
        """The text form is the canonical dump"""
        report = ModelDumpReport()
        assert report.format_report(report.generate(fig2_model)) == FIG2_DUMP

    def test_canonical_json(self, fig2_model):
        """Zero points and separators appear in JSON"""
        payload = ModelDumpReport().generate(fig2_model).payload
        assert payload["zero_points"] == [3, 5, 7, 9]
        assert payload["separators"] == [4, 6, 8]

    def test_harary_payload(self, path3_graph):
        """Set-system payloads are tagged harary"""
        payload = ModelDumpReport().generate(harary_model(path3_graph)).payload
        assert payload["kind"] == "harary"
        assert payload["sets"]["b"] == ["a-b", "b", "b-c"]
        assert payload["hitting"] == ["a", "b", "c"]

    def test_oracle_report(self):
        """Counts, then one line per disagreement"""
        run = OracleRun(
            kind="decision",
            cases=3,
            seed=5,
            agreements=2,
            disagreements=[OracleCase(1, 6, 4, "ehig", "not-ehig")],
        )
        data = OracleReport().generate(run)
        assert data.lines == [
            "oracle decision cases=3 seed=5",
            "agree 2",
            "disagree 1",
            "skipped 0",
            "case 1 seed=6 size=4: polynomial=ehig oracle=not-ehig",
        ]
        assert data.exit_code == 1
        assert data.payload["disagreements"][0]["polynomial"] == "ehig"

    def test_oracle_unverified(self):
        """Unverified certificates fail the run"""
        run = OracleRun(kind="decision", cases=1, seed=0, agreements=1, unverified=1)
        data = OracleReport().generate(run)
        assert data.lines[-1] == "unverified 1"
        assert data.exit_code == 1
