"""
Tests for the suite runner.
"""

import os
import shutil
import tempfile

import pytest

from gmdual.core.error_handler import ValidationError
from gmdual.pipeline.report_builder import deterministic_view
from gmdual.pipeline.suite_runner import (
    BUNDLED_INSTANCES_DIR,
    SuiteRunner,
    aggregate,
    discover_instances,
    render_suite_text,
    suite_exit_code,
)

MOCK_DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "mock_data")


class TestDiscoverInstances:
    """
    Tests for discover_instances.
    """

    def test_bundled_instances(self):
        """
        Test that the bundled directory lists its files sorted and skips invalid/.
        """
        names = [os.path.basename(path) for path in discover_instances(BUNDLED_INSTANCES_DIR)]
        assert names == ["n2.json", "n3.json", "n3_tilde.json", "n4.json", "n4_tilde.json", "n5.yaml", "n6.json"]

    def test_patterns(self):
        """
        Test restricting discovery to YAML files.
        """
        paths = discover_instances(BUNDLED_INSTANCES_DIR, ["*.yaml"])
        assert [os.path.basename(path) for path in paths] == ["n5.yaml"]

    def test_empty_directory(self, tmp_path):
        """
        Test that a directory without instances is an input error.
        """
        with pytest.raises(ValidationError) as excinfo:
            discover_instances(str(tmp_path))
        assert "no instances" in str(excinfo.value)

    def test_missing_directory(self):
        """
        Test that a missing directory is an input error.
        """
        with pytest.raises(ValidationError):
            discover_instances("/nonexistent/instances")


class TestSuiteRunner:
    """
    Tests for the SuiteRunner class.
    """

    def setup_method(self):
        """
        Set up a directory with one good and one malformed instance.
        """
        self.temp_dir = tempfile.mkdtemp()
        shutil.copy(os.path.join(BUNDLED_INSTANCES_DIR, "n2.json"), self.temp_dir)
        shutil.copy(os.path.join(MOCK_DATA_DIR, "instance_wrong_length.json"), self.temp_dir)

    def teardown_method(self):
        """
        Clean up test environment.
        """
        shutil.rmtree(self.temp_dir)

    def test_run(self):
        """
        Test that a malformed file becomes an ERROR entry and fails the suite.
        """
        result = SuiteRunner(jobs=1).run(self.temp_dir)
        assert result["status"] == "FAIL"
        by_file = {entry["file"]: entry for entry in result["instances"]}
        assert by_file["n2.json"]["status"] == "PASS"
        assert by_file["n2.json"]["failures"] == []
        assert by_file["instance_wrong_length.json"]["status"] == "ERROR"
        assert list(result["reports"]) == ["n2.json"]
        assert suite_exit_code(result) == 1

    def test_parallel_matches_serial(self):
        """
        Test that a process pool gives the same results in the same order.
        """
        os.remove(os.path.join(self.temp_dir, "instance_wrong_length.json"))
        shutil.copy(os.path.join(BUNDLED_INSTANCES_DIR, "n3.json"), self.temp_dir)
        serial = SuiteRunner(jobs=1).run(self.temp_dir)
        parallel = SuiteRunner(jobs=2).run(self.temp_dir)
        assert serial["instances"] == parallel["instances"]
        assert {name: deterministic_view(r) for name, r in serial["reports"].items()} == \
            {name: deterministic_view(r) for name, r in parallel["reports"].items()}
        assert suite_exit_code(serial) == 0

    def test_invalid_jobs(self):
        """
        Test that fewer than one job is rejected.
        """
        with pytest.raises(ValidationError):
            SuiteRunner(jobs=0)


class TestAggregate:
    """
    Tests for aggregate and its text rendering.
    """

    def test_aggregate_and_render(self):
        """
        Test summaries, the overall status and the text layout.
        """
        passing = {
            "instance": {"label": "a"},
            "status": "PASS",
            "checks": [{"name": "curvature", "status": "PASS", "detail": ""}],
        }
        failing = {
            "instance": {"label": "b"},
            "status": "FAIL",
            "checks": [{"name": "dual_generator", "status": "FAIL", "detail": "residual theta"}],
        }
        result = aggregate([("/x/a.json", passing), ("/x/b.json", failing)])
        assert result["status"] == "FAIL"
        assert result["instances"] == [
            {"file": "a.json", "status": "PASS", "label": "a", "failures": []},
            {"file": "b.json", "status": "FAIL", "label": "b", "failures": ["dual_generator"]},
        ]
        assert render_suite_text(result).splitlines() == [
            "[PASS ] a.json",
            "[FAIL ] b.json  dual_generator",
            "Suite: FAIL (2 instances)",
        ]

    def test_all_passing(self):
        """
        Test that the suite passes when every instance passes.
        """
        report = {"instance": {}, "status": "PASS", "checks": []}
        assert aggregate([("a.json", report)])["status"] == "PASS"
