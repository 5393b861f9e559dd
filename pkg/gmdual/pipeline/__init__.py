"""
Orchestration: the verification battery of one instance, report rendering
and suite runs over a directory of instances.
"""

from gmdual.pipeline.report_builder import (
    ReportBuilder,
    deterministic_view,
    render_json,
    render_text,
    save_report,
    validate_report,
)
from gmdual.pipeline.verification_runner import VerificationRunner, exit_code, verify_file
from gmdual.pipeline.suite_runner import (
    BUNDLED_INSTANCES_DIR,
    SuiteRunner,
    aggregate,
    discover_instances,
    render_suite_text,
    suite_exit_code,
)
