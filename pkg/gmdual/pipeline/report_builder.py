"""
Report builder module.

This module collects the outcome of one verification run (check records,
discovered conventions, solved Gram matrices and stage timings) and renders
it as JSON or as plain text.
"""

import json
import os
import time
from typing import Any, Dict, Iterable, List, Optional

import jsonschema

from gmdual.core.constants import STATUS_ERROR, STATUS_FAIL, STATUS_PASS
from gmdual.core.error_handler import ValidationError, VerificationError
from gmdual.core.logging_config import get_logger
from gmdual.core.results import CheckResult
from gmdual.pairing.gram_solver import FlatGramSolution
from gmdual.schemas import load_schema

logger = get_logger(__name__)


class ReportBuilder:
    """
    Class for assembling a verification report.

    Records are kept in the order they are added, so two runs on the same
    instance produce identical reports apart from the timings.
    """

    def __init__(self, instance_echo: Optional[Dict[str, Any]] = None):
        """
        Initialize the ReportBuilder.

        Args:
            instance_echo: The instance as returned by SpectrumInstance.to_dict.
        """
        self.instance_echo = instance_echo or {}
        self.checks: List[Dict[str, str]] = []
        self.conventions: Dict[str, Any] = {}
        self.gram: Dict[str, Dict[str, Any]] = {}
        self.timings: Dict[str, float] = {}
        self._started: Dict[str, float] = {}

    def start_timing(self, label: str) -> None:
        self._started[label] = time.perf_counter()

    def end_timing(self, label: str) -> float:
        """
        End timing a stage and return the elapsed time.

        Args:
            label: Label passed to start_timing.

        Returns:
            Elapsed time in seconds, 0.0 if the stage was never started.
        """
        if label not in self._started:
            logger.warning(f"No timing started for {label}")
            return 0.0
        elapsed = time.perf_counter() - self._started.pop(label)
        self.timings[label] = self.timings.get(label, 0.0) + elapsed
        logger.debug(f"Timing for {label}: {elapsed:.3f} seconds")
        return elapsed

    def add_check(self, result: CheckResult) -> None:
        self.checks.append(result.to_dict())

    def add_checks(self, results: Iterable[CheckResult]) -> None:
        for result in results:
            self.add_check(result)

    def record_error(self, name: str, error: Exception) -> None:
        """
        Record a stage that raised instead of producing a verdict.

        Args:
            name: Check name shown in the report.
            error: The VerificationError or ValidationError raised by the stage.
        """
        if isinstance(error, (VerificationError, ValidationError)):
            detail = error.message
            extra = getattr(error, "detail", None)
            if extra:
                detail += f": {extra}"
        else:
            detail = str(error)
        logger.error(f"{name} raised: {detail}")
        self.checks.append({"name": name, "status": STATUS_ERROR, "detail": detail})

    def set_convention(self, key: str, value: Any) -> None:
        self.conventions[key] = value

    def add_gram(self, basis: str, solution: FlatGramSolution) -> None:
        self.gram[basis] = {
            "dimension": solution.dimension,
            "convention": solution.convention,
            "shift": solution.gram.shift,
            "entries": solution.gram.to_strings(),
        }

    @property
    def status(self) -> str:
        """PASS iff every record passed; ERROR wins over FAIL."""
        statuses = {check["status"] for check in self.checks}
        if STATUS_ERROR in statuses:
            return STATUS_ERROR
        if STATUS_FAIL in statuses or not self.checks:
            return STATUS_FAIL
        return STATUS_PASS

    def build(self) -> Dict[str, Any]:
        """
        Build the report dictionary.

        Returns:
            Dict[str, Any]: Keys instance, status, checks, conventions, gram, timings.
        """
        return {
            "instance": dict(self.instance_echo),
            "status": self.status,
            "checks": [dict(check) for check in self.checks],
            "conventions": dict(self.conventions),
            "gram": {basis: dict(data) for basis, data in self.gram.items()},
            "timings": {label: round(value, 6) for label, value in self.timings.items()},
        }


def validate_report(report: Dict[str, Any]) -> None:
    """
    Validate a report against the report schema.

    Raises:
        ValidationError: If the report does not conform.
    """
    try:
        jsonschema.validate(instance=report, schema=load_schema("report"))
    except jsonschema.exceptions.ValidationError as e:
        field = ".".join(str(part) for part in e.path) or None
        raise ValidationError(f"Report does not match schema: {e.message}", field=field)


def deterministic_view(report: Dict[str, Any]) -> Dict[str, Any]:
    """The report without its timings."""
    return {key: value for key, value in report.items() if key != "timings"}


def render_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2)


def render_text(report: Dict[str, Any]) -> str:
    """
    Render a report as aligned PASS/FAIL/ERROR lines.

    Args:
        report: Report dictionary as produced by ReportBuilder.build.

    Returns:
        str: Human-readable report.
    """
    instance = report.get("instance", {})
    header = instance.get("label") or f"n={instance.get('n')}"
    lines = [f"Instance {header}: n={instance.get('n')}, nu=({', '.join(instance.get('nu', []))}), c={instance.get('c')}"]
    if instance.get("nu_tilde"):
        lines.append(f"  nu_tilde=({', '.join(instance['nu_tilde'])})")

    width = max((len(check["name"]) for check in report["checks"]), default=0)
    for check in report["checks"]:
        line = f"  [{check['status']:<5}] {check['name']:<{width}}"
        if check["detail"]:
            line += f"  {check['detail']}"
        lines.append(line.rstrip())

    if report["conventions"]:
        lines.append("Conventions:")
        for key, value in report["conventions"].items():
            lines.append(f"  {key}: {value}")

    for basis, data in report["gram"].items():
        lines.append(f"Gram ({basis}): dimension {data['dimension']}, convention {data['convention']}, shift {data['shift']}")
        lines.extend(render_matrix(data["entries"]))

    if report["timings"]:
        total = sum(report["timings"].values())
        lines.append(f"Time: {total:.2f} s")
    lines.append(f"Status: {report['status']}")
    return "\n".join(lines)


def render_matrix(entries: List[List[str]], indent: str = "  ") -> List[str]:
    """Rows of printed operators with columns padded to a common width."""
    if not entries:
        return []
    widths = [max(len(row[j]) for row in entries) for j in range(len(entries[0]))]
    return [indent + "[ " + "  ".join(cell.rjust(widths[j]) for j, cell in enumerate(row)) + " ]" for row in entries]


def save_report(report: Dict[str, Any], output_dir: str, filename: str = "report.json") -> str:
    """
    Save a report as JSON.

    Args:
        report: Report dictionary.
        output_dir: Directory to save the report to.
        filename: Name of the report file.

    Returns:
        Path to the saved report file.
    """
    os.makedirs(output_dir, exist_ok=True)
    report_path = os.path.join(output_dir, filename)
    with open(report_path, "w") as f:
        f.write(render_json(report))
    logger.info(f"Saved report to {report_path}")
    return report_path
