"""
Spectral data of a Gauss-Manin system and its validation.

An instance is the rank n, the spectral numbers nu_1..nu_n, the non-zero
corner constant c and optionally the spectral numbers nu_tilde of the second
basis. Malformed data raises ValidationError at construction; the spectral
constraints are reported check by check by ``validate``, never raised.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from gmdual.core.error_handler import ValidationError, validate_required_fields
from gmdual.core.logging_config import get_logger
from gmdual.core.results import CheckResult, all_passed, failures
from gmdual.core.utils import format_rational, parse_rational

logger = get_logger(__name__)


@dataclass(frozen=True)
class SpectrumInstance:
    """
    Immutable spectral data (n, nu, c, nu_tilde).

    Attributes:
        n: Rank, at least 1
        nu: Spectral numbers nu_1..nu_n
        c: Non-zero constant of the companion corner
        nu_tilde: Optional spectral numbers of the omega-tilde basis
        label: Free-form name shown in reports
    """

    n: int
    nu: Tuple[Fraction, ...]
    c: Fraction
    nu_tilde: Optional[Tuple[Fraction, ...]] = None
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"n must be a positive integer, got {self.n!r}", field="n", value=self.n)
        object.__setattr__(self, "nu", self._rationals(self.nu, "nu"))
        object.__setattr__(self, "c", parse_rational(self.c, "c"))
        if self.c == 0:
            raise ValidationError("c must be non-zero", field="c", value=self.c)
        if self.nu_tilde is not None:
            object.__setattr__(self, "nu_tilde", self._rationals(self.nu_tilde, "nu_tilde"))

    def _rationals(self, values: Sequence[Any], name: str) -> Tuple[Fraction, ...]:
        if isinstance(values, (str, bytes)) or not isinstance(values, Sequence):
            raise ValidationError(f"{name} must be a list of rationals", field=name, value=values)
        if len(values) != self.n:
            raise ValidationError(f"{name} has {len(values)} entries, expected n = {self.n}", field=name, value=values)
        return tuple(parse_rational(v, f"{name}[{i + 1}]") for i, v in enumerate(values))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpectrumInstance":
        """Build an instance from an InstanceFile document."""
        validate_required_fields(data, ["n", "nu", "c"], "SpectrumInstance")
        return cls(
            n=data["n"],
            nu=tuple(data["nu"]),
            c=data["c"],
            nu_tilde=tuple(data["nu_tilde"]) if data.get("nu_tilde") is not None else None,
            label=data.get("label"),
        )

    def to_dict(self) -> Dict[str, Any]:
        """Echo the instance with every rational as a "p/q" string."""
        data: Dict[str, Any] = {}
        if self.label is not None:
            data["label"] = self.label
        data["n"] = self.n
        data["nu"] = [format_rational(v) for v in self.nu]
        data["c"] = format_rational(self.c)
        if self.nu_tilde is not None:
            data["nu_tilde"] = [format_rational(v) for v in self.nu_tilde]
        return data

    @property
    def k(self) -> Fraction:
        """The constant c / n^n of the generator P1."""
        return self.c / self.n ** self.n

    def a_values(self, basis_nu: Optional[Sequence[Fraction]] = None) -> Tuple[Fraction, ...]:
        """a_i = (i - 1 - nu_i) / n for i = 1..n."""
        values = self.nu if basis_nu is None else basis_nu
        return tuple((i - v) / self.n for i, v in enumerate(values))

    @property
    def is_degenerate(self) -> bool:
        return self.n == 1


@dataclass
class ValidationReport:
    """Named validation checks of one instance."""

    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all_passed(self.checks)

    @property
    def failed(self) -> List[CheckResult]:
        return failures(self.checks)

    def get(self, name: str) -> Optional[CheckResult]:
        for check in self.checks:
            if check.name == name:
                return check
        return None


def check_gaps(nu: Sequence[Fraction], name: str = "property_a") -> CheckResult:
    """nu_{i+1} - nu_i <= 1; witness is the first failing 1-based i."""
    for i in range(len(nu) - 1):
        if nu[i + 1] - nu[i] > 1:
            return CheckResult(name, False, f"i={i + 1}: nu_{i + 2} - nu_{i + 1} = {format_rational(nu[i + 1] - nu[i])} > 1")
    return CheckResult(name, True)


def check_sorted_symmetry(nu: Sequence[Fraction], name: str = "property_b") -> CheckResult:
    """After sorting, nu_sigma(i) + nu_sigma(n+1-i) = n - 1."""
    n = len(nu)
    ordered = sorted(nu)
    for i in range(n):
        total = ordered[i] + ordered[n - 1 - i]
        if total != n - 1:
            return CheckResult(name, False, f"(i, j)=({i + 1}, {n - i}): sorted sum {format_rational(total)} != {n - 1}")
    return CheckResult(name, True)


def check_negation_symmetry(a_values: Sequence[Fraction], name: str = "duality_symmetry") -> CheckResult:
    """The multiset {a_i} equals {-a_i}."""
    counts = Counter(a_values)
    for value in sorted(counts):
        if counts[value] != counts.get(-value, 0):
            return CheckResult(name, False, f"a={format_rational(value)} occurs {counts[value]} times, "
                                            f"-a={format_rational(-value)} occurs {counts.get(-value, 0)} times")
    return CheckResult(name, True)


def check_index_symmetry(nu: Sequence[Fraction], name: str = "pairing_symmetry") -> CheckResult:
    """nu_i + nu_{n+1-i} = n - 1 index-wise."""
    n = len(nu)
    for i in range(n):
        total = nu[i] + nu[n - 1 - i]
        if total != n - 1:
            return CheckResult(name, False, f"(i, j)=({i + 1}, {n - i}): nu_i + nu_j = {format_rational(total)} != {n - 1}")
    return CheckResult(name, True)


def check_span(nu: Sequence[Fraction], name: str = "tilde_span") -> CheckResult:
    """nu_1 - nu_n <= 1."""
    span = nu[0] - nu[-1]
    if span > 1:
        return CheckResult(name, False, f"nu_1 - nu_n = {format_rational(span)} > 1")
    return CheckResult(name, True)


def check_tilde_consistency(nu: Sequence[Fraction], nu_tilde: Sequence[Fraction],
                            name: str = "tilde_consistency") -> CheckResult:
    """When nu_1 - nu_n <= 1 the two bases coincide, so nu_tilde must equal nu."""
    span = nu[0] - nu[-1]
    if span <= 1 and tuple(nu_tilde) != tuple(nu):
        return CheckResult(name, False, f"nu_1 - nu_n = {format_rational(span)} <= 1 requires nu_tilde = nu")
    return CheckResult(name, True)


def validate(instance: SpectrumInstance) -> ValidationReport:
    """
    Run every spectral check on ``instance``.

    Args:
        instance: The spectral data

    Returns:
        ValidationReport: One record per check, failures carry a witness
    """
    logger.info(f"Validating spectrum n={instance.n}")

    checks = [
        check_gaps(instance.nu),
        check_sorted_symmetry(instance.nu),
        check_negation_symmetry(instance.a_values()),
        check_index_symmetry(instance.nu),
    ]
    if instance.nu_tilde is not None:
        checks.extend([
            check_gaps(instance.nu_tilde, "tilde_property_a"),
            check_sorted_symmetry(instance.nu_tilde, "tilde_property_b"),
            check_negation_symmetry(instance.a_values(instance.nu_tilde), "tilde_duality_symmetry"),
            check_index_symmetry(instance.nu_tilde, "tilde_pairing_symmetry"),
            check_span(instance.nu_tilde),
            check_tilde_consistency(instance.nu, instance.nu_tilde),
        ])
    if instance.is_degenerate:
        checks.append(CheckResult("degenerate", True, "n = 1: every statement holds trivially"))

    report = ValidationReport(checks)
    for check in report.failed:
        logger.warning(f"Spectrum check {check.name} failed: {check.detail}")
    return report
