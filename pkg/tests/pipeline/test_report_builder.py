"""
Tests for report builder.
"""

import json
import os

import pytest

from gmdual.core.error_handler import ValidationError, VerificationError
from gmdual.core.results import CheckResult
from gmdual.ore import THETA, ZERO
from gmdual.pairing import FlatGramSolution, GramMatrix
from gmdual.pipeline.report_builder import (
    ReportBuilder,
    deterministic_view,
    render_json,
    render_matrix,
    render_text,
    save_report,
    validate_report,
)

INSTANCE_ECHO = {"label": "demo", "n": 2, "nu": ["0", "1"], "c": "1"}


def antidiagonal_solution():
    gram = GramMatrix(entries=((ZERO, THETA), (THETA, ZERO)))
    return FlatGramSolution(dimension=1, gram=gram, convention="iota_pullback")


class TestReportBuilder:
    """
    Tests for the ReportBuilder class.
    """

    def setup_method(self):
        """
        Set up test environment.
        """
        self.builder = ReportBuilder(INSTANCE_ECHO)

    def test_empty_report_fails(self):
        """
        Test that a report without checks is not a PASS.
        """
        assert self.builder.status == "FAIL"

    def test_status_precedence(self):
        """
        Test PASS, then FAIL, then ERROR as records accumulate.
        """
        self.builder.add_check(CheckResult("first", True))
        assert self.builder.status == "PASS"
        self.builder.add_check(CheckResult("second", False, "witness"))
        assert self.builder.status == "FAIL"
        self.builder.record_error("third", VerificationError("broke", check="third", detail="residual t"))
        assert self.builder.status == "ERROR"
        assert self.builder.checks[-1] == {"name": "third", "status": "ERROR", "detail": "broke: residual t"}

    def test_record_plain_exception(self):
        """
        Test that other exceptions are recorded by their text.
        """
        self.builder.record_error("stage", RuntimeError("boom"))
        assert self.builder.checks == [{"name": "stage", "status": "ERROR", "detail": "boom"}]

    def test_timings(self):
        """
        Test that timings accumulate and an unstarted label returns 0.
        """
        self.builder.start_timing("stage")
        elapsed = self.builder.end_timing("stage")
        assert elapsed >= 0
        assert "stage" in self.builder.timings
        assert self.builder.end_timing("never") == 0.0
        assert "never" not in self.builder.timings

    def test_build(self):
        """
        Test the keys and contents of a built report.
        """
        self.builder.add_checks([CheckResult("a", True), CheckResult("b", True, "note")])
        self.builder.set_convention("phi_sign", -1)
        self.builder.add_gram("omega", antidiagonal_solution())
        report = self.builder.build()
        assert list(report) == ["instance", "status", "checks", "conventions", "gram", "timings"]
        assert report["status"] == "PASS"
        assert report["conventions"] == {"phi_sign": -1}
        assert report["gram"]["omega"] == {
            "dimension": 1,
            "convention": "iota_pullback",
            "shift": 0,
            "entries": [["0", "theta"], ["theta", "0"]],
        }
        validate_report(report)

    def test_build_is_a_copy(self):
        """
        Test that mutating a built report leaves the builder untouched.
        """
        self.builder.add_check(CheckResult("a", True))
        report = self.builder.build()
        report["checks"][0]["status"] = "FAIL"
        assert self.builder.status == "PASS"


class TestRendering:
    """
    Tests for validating, rendering and saving reports.
    """

    def build_report(self):
        builder = ReportBuilder(INSTANCE_ECHO)
        builder.add_checks([CheckResult("curvature", True), CheckResult("dual_generator", False, "residual theta")])
        builder.set_convention("phi_sign", -1)
        builder.add_gram("omega", antidiagonal_solution())
        builder.timings["total"] = 0.25
        return builder.build()

    def test_validate_report_rejects_bad_status(self):
        """
        Test that a report with an unknown status fails the schema.
        """
        report = self.build_report()
        report["status"] = "MAYBE"
        with pytest.raises(ValidationError) as excinfo:
            validate_report(report)
        assert excinfo.value.field == "status"

    def test_deterministic_view(self):
        """
        Test that only the timings are dropped.
        """
        view = deterministic_view(self.build_report())
        assert "timings" not in view
        assert view["status"] == "FAIL"

    def test_render_json(self):
        """
        Test that JSON output parses back to the report.
        """
        report = self.build_report()
        assert json.loads(render_json(report)) == report

    def test_render_text(self):
        """
        Test the text layout.
        """
        lines = render_text(self.build_report()).splitlines()
        assert lines[0] == "Instance demo: n=2, nu=(0, 1), c=1"
        assert lines[1] == "  [PASS ] curvature"
        assert lines[2] == "  [FAIL ] dual_generator  residual theta"
        assert "Conventions:" in lines
        assert "  phi_sign: -1" in lines
        assert "Gram (omega): dimension 1, convention iota_pullback, shift 0" in lines
        assert "Time: 0.25 s" in lines
        assert lines[-1] == "Status: FAIL"

    def test_render_matrix(self):
        """
        Test that columns are right-aligned to a common width.
        """
        assert render_matrix([["0", "theta"], ["theta", "0"]]) == [
            "  [     0  theta ]",
            "  [ theta      0 ]",
        ]
        assert render_matrix([]) == []

    def test_save_report(self, tmp_path):
        """
        Test saving a report to a new directory.
        """
        report = self.build_report()
        path = save_report(report, str(tmp_path / "out"), "n2.json")
        assert os.path.basename(path) == "n2.json"
        with open(path) as f:
            assert json.load(f) == report
