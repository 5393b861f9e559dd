"""
Common utility functions for the gmdual package.

- Exact rational parsing and formatting ("p/q" strings, never floats)
- Loading structured documents (JSON or YAML, chosen by extension)
"""

import os
import re
import json
from fractions import Fraction
from typing import Any, Dict, Union

import yaml

from gmdual.core.error_handler import ValidationError

RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")

YAML_EXTENSIONS = (".yaml", ".yml")


def parse_rational(value: Union[str, int, Fraction], field: str = "value") -> Fraction:
    """
    Parse an exact rational from ``"p/q"``, ``"p"`` or an integer.

    Floats are rejected: every scalar in the kernel must be exact.

    Args:
        value: The textual or integer representation
        field: Field name used in error messages

    Returns:
        Fraction: The reduced rational

    Raises:
        ValidationError: If the value is not an exact rational
    """
    if isinstance(value, bool):
        raise ValidationError(f"Expected a rational, got {value!r}", field=field, value=value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValidationError(f"Expected a rational string, got {value!r}", field=field, value=value)

    match = RATIONAL_PATTERN.match(value)
    if not match:
        raise ValidationError(f"Malformed rational {value!r}", field=field, value=value)

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValidationError(f"Zero denominator in {value!r}", field=field, value=value)

    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """
    Format a rational as ``"p"`` or ``"p/q"``.

    Args:
        value (Fraction): The rational to format

    Returns:
        str: Canonical text form
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def load_json_file(file_path: str) -> Dict[str, Any]:
    """
    Load a JSON file.

    Args:
        file_path (str): Path to JSON file

    Returns:
        Dict[str, Any]: Loaded JSON data

    Raises:
        FileNotFoundError: If file does not exist
        json.JSONDecodeError: If file is not valid JSON
    """
    with open(file_path, "r") as f:
        return json.load(f)


def load_structured_file(file_path: str) -> Any:
    """
    Load a JSON or YAML document, chosen by file extension.

    Args:
        file_path (str): Path to the document

    Returns:
        Any: The parsed document

    Raises:
        FileNotFoundError: If file does not exist
        ValidationError: If the document cannot be parsed
    """
    extension = os.path.splitext(file_path)[1].lower()

    try:
        if extension in YAML_EXTENSIONS:
            with open(file_path, "r") as f:
                return yaml.safe_load(f)
        return load_json_file(file_path)
    except json.JSONDecodeError as e:
        raise ValidationError(f"Invalid JSON in {file_path}: {e.msg} (line {e.lineno}, column {e.colno})")
    except yaml.YAMLError as e:
        raise ValidationError(f"Invalid YAML in {file_path}: {e}")
