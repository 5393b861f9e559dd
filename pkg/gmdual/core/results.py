"""
Result records shared by every verification stage.

A failed check is data, not an exception: stages return CheckResult records
and the report builder turns them into PASS/FAIL lines.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List

from gmdual.core.constants import STATUS_FAIL, STATUS_PASS


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one named check.

    Attributes:
        name: Stable check name used in reports
        passed: Whether the check holds
        detail: Witness, residual or note; empty when there is nothing to say
    """

    name: str
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return STATUS_PASS if self.passed else STATUS_FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(result.passed for result in results)


def failures(results: Iterable[CheckResult]) -> List[CheckResult]:
    return [result for result in results if not result.passed]
