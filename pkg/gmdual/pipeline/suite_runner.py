"""
Suite runner module.

This module verifies every instance file in a directory, optionally with a
pool of worker processes, and aggregates the per-instance reports.
"""

import glob
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Tuple

from gmdual.core.config import get_config_value
from gmdual.core.constants import (
    DEFAULT_INSTANCE_PATTERNS,
    DEFAULT_SUITE_JOBS,
    EXIT_FAIL,
    EXIT_PASS,
    STATUS_ERROR,
    STATUS_FAIL,
    STATUS_PASS,
)
from gmdual.core.error_handler import ValidationError
from gmdual.core.logging_config import get_logger
from gmdual.pipeline.verification_runner import verify_file

logger = get_logger(__name__)

BUNDLED_INSTANCES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "instances")


def discover_instances(directory: str, patterns: Optional[List[str]] = None) -> List[str]:
    """
    List the instance files directly inside ``directory``, sorted by file name.

    Args:
        directory: Directory to scan; sub-directories are not searched.
        patterns: Glob patterns, defaults to ``suite.patterns``.

    Returns:
        List[str]: Paths of the matching files.

    Raises:
        ValidationError: If the directory is unreadable or holds no instances.
    """
    if not os.path.isdir(directory) or not os.access(directory, os.R_OK):
        raise ValidationError(f"Cannot read instance directory {directory}", field="instances", value=directory)

    patterns = patterns or get_config_value("suite.patterns", DEFAULT_INSTANCE_PATTERNS)
    paths = set()
    for pattern in patterns:
        paths.update(p for p in glob.glob(os.path.join(directory, pattern)) if os.path.isfile(p))

    if not paths:
        raise ValidationError("no instances", field="instances", value=directory)
    return sorted(paths, key=os.path.basename)


def _verify_entry(path: str) -> Tuple[str, Dict[str, Any]]:
    """Verify one file; input errors become an ERROR entry instead of aborting the suite."""
    try:
        return path, verify_file(path)
    except ValidationError as e:
        logger.error(f"Could not load {path}: {e}")
        return path, {"status": STATUS_ERROR, "error": str(e)}


class SuiteRunner:
    """
    Class for verifying a directory of instances.

    Each instance runs single-threaded; with more than one job the instances
    are spread over a process pool. Results are ordered by file name
    whatever the completion order.
    """

    def __init__(self, jobs: Optional[int] = None):
        """
        Initialize the SuiteRunner.

        Args:
            jobs: Number of worker processes, defaults to ``suite.jobs``.
        """
        self.jobs = jobs if jobs is not None else get_config_value("suite.jobs", DEFAULT_SUITE_JOBS)
        if self.jobs < 1:
            raise ValidationError("jobs must be at least 1", field="jobs", value=self.jobs)

    def run(self, directory: str) -> Dict[str, Any]:
        """
        Verify every instance in ``directory``.

        Args:
            directory: Directory of instance files.

        Returns:
            Dict[str, Any]: Aggregate with keys status, instances (one summary
            per file) and reports (the full report per file name).

        Raises:
            ValidationError: If the directory is unreadable or empty.
        """
        paths = discover_instances(directory)
        logger.info(f"Running suite of {len(paths)} instances with {self.jobs} job(s)")

        if self.jobs > 1 and len(paths) > 1:
            with ProcessPoolExecutor(max_workers=self.jobs) as executor:
                entries = list(executor.map(_verify_entry, paths))
        else:
            entries = [_verify_entry(path) for path in paths]

        return aggregate(entries)


def aggregate(entries: List[Tuple[str, Dict[str, Any]]]) -> Dict[str, Any]:
    """
    Combine per-file reports; the suite passes iff every file passes.

    Args:
        entries: (path, report) pairs in file-name order.

    Returns:
        Dict[str, Any]: The aggregate report.
    """
    instances = []
    reports = {}
    for path, report in entries:
        name = os.path.basename(path)
        summary: Dict[str, Any] = {"file": name, "status": report["status"]}
        if "error" in report:
            summary["failures"] = [report["error"]]
        else:
            summary["label"] = report["instance"].get("label")
            summary["failures"] = [c["name"] for c in report["checks"] if c["status"] != STATUS_PASS]
            reports[name] = report
        instances.append(summary)

    status = STATUS_PASS if all(entry["status"] == STATUS_PASS for entry in instances) else STATUS_FAIL
    failed = [entry["file"] for entry in instances if entry["status"] != STATUS_PASS]
    if failed:
        logger.warning(f"Suite failed for: {', '.join(failed)}")
    return {"status": status, "instances": instances, "reports": reports}


def suite_exit_code(result: Dict[str, Any]) -> int:
    return EXIT_PASS if result["status"] == STATUS_PASS else EXIT_FAIL


def render_suite_text(result: Dict[str, Any]) -> str:
    """One line per instance followed by the suite status."""
    width = max((len(entry["file"]) for entry in result["instances"]), default=0)
    lines = []
    for entry in result["instances"]:
        line = f"[{entry['status']:<5}] {entry['file']:<{width}}"
        if entry["failures"]:
            line += "  " + ", ".join(entry["failures"])
        lines.append(line.rstrip())
    lines.append(f"Suite: {result['status']} ({len(result['instances'])} instances)")
    return "\n".join(lines)
