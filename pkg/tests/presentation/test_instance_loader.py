"""
Tests for loading instance files.
"""

import json
import os
import tempfile
from fractions import Fraction

import pytest

from gmdual.core.error_handler import ValidationError
from gmdual.presentation.instance_loader import InstanceLoader, load_instance

# Path to mock data
MOCK_DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "mock_data")


class TestInstanceLoader:
    """
    Tests for the InstanceLoader class.
    """

    def setup_method(self):
        """
        Set up test environment.
        """
        self.loader = InstanceLoader()
        self.temp_dir = tempfile.mkdtemp()

    def teardown_method(self):
        """
        Clean up test environment.
        """
        for name in os.listdir(self.temp_dir):
            os.remove(os.path.join(self.temp_dir, name))
        os.rmdir(self.temp_dir)

    def write(self, name: str, content: str) -> str:
        path = os.path.join(self.temp_dir, name)
        with open(path, "w") as f:
            f.write(content)
        return path

    def test_load_json(self):
        """
        Test loading the JSON mock instance.
        """
        instance = self.loader.load(os.path.join(MOCK_DATA_DIR, "instance_test.json"))
        assert instance.label == "mock_n2"
        assert instance.n == 2
        assert instance.nu == (Fraction(0), Fraction(1))

    def test_load_yaml_with_default_label(self):
        """
        Test loading YAML with mixed integer and string rationals; the label defaults to the file stem.
        """
        instance = load_instance(os.path.join(MOCK_DATA_DIR, "instance_test.yaml"))
        assert instance.label == "instance_test"
        assert instance.nu == (Fraction(1, 2), Fraction(1), Fraction(3, 2))
        assert instance.c == 1

    def test_wrong_length(self):
        """
        Test that a nu array of the wrong length is rejected.
        """
        with pytest.raises(ValidationError) as excinfo:
            self.loader.load(os.path.join(MOCK_DATA_DIR, "instance_wrong_length.json"))
        assert "expected n = 3" in str(excinfo.value)

    def test_malformed_json(self):
        """
        Test that unparsable JSON is reported with a position.
        """
        with pytest.raises(ValidationError) as excinfo:
            self.loader.load(os.path.join(MOCK_DATA_DIR, "instance_malformed.json"))
        assert "Invalid JSON" in str(excinfo.value)

    def test_missing_file(self):
        """
        Test that a missing file raises ValidationError.
        """
        with pytest.raises(ValidationError) as excinfo:
            self.loader.load(os.path.join(self.temp_dir, "absent.json"))
        assert excinfo.value.field == "path"

    def test_schema_violations(self):
        """
        Test that extra keys, malformed rationals and a missing c fail the schema.
        """
        documents = [
            {"n": 2, "nu": ["0", "1"], "c": "1", "extra": True},
            {"n": 2, "nu": ["0", "one"], "c": "1"},
            {"n": 2, "nu": ["0", "1"]},
            {"n": 0, "nu": ["0"], "c": "1"},
        ]
        for index, document in enumerate(documents):
            path = self.write(f"bad_{index}.json", json.dumps(document))
            with pytest.raises(ValidationError) as excinfo:
                self.loader.load(path)
            assert "schema validation" in str(excinfo.value)

    def test_zero_c_passes_schema_but_is_rejected(self):
        """
        Test that c = 0 is caught after the schema.
        """
        path = self.write("zero_c.json", json.dumps({"n": 2, "nu": ["0", "1"], "c": "0"}))
        with pytest.raises(ValidationError) as excinfo:
            self.loader.load(path)
        assert excinfo.value.field == "c"

    def test_validate_document_returns_document(self):
        """
        Test that a valid document is returned unchanged.
        """
        document = {"n": 1, "nu": [0], "c": "2/3", "label": "x"}
        assert self.loader.validate_document(document) is document
