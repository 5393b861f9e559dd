"""
Verification runner module.

This module runs the full verification battery on one instance: spectral
validation, generators, connection, calibration, lattice checks, duality
identities and the flat pairing in every available basis.
"""

from typing import Any, Callable, Dict, List, Optional

from gmdual.core.constants import (
    BASIS_OMEGA,
    BASIS_OMEGA_TILDE,
    EXIT_FAIL,
    EXIT_PASS,
    IOTA_VARIABLE,
    LATTICE_G0_LOG,
    LATTICE_G0_STAR,
    P1_PRIME_CONSTANT,
    STATUS_PASS,
)
from gmdual.core.error_handler import VerificationError
from gmdual.core.logging_config import get_logger, log_execution_context
from gmdual.core.results import CheckResult
from gmdual.duality import check_phi_welldefined, duality_results, duality_sign
from gmdual.pairing import (
    FlatGramSolution,
    check_homogeneity,
    check_lattice_compat,
    check_nondegenerate,
    check_pole_orders,
    check_symmetry,
    induced_S0,
    solve_flat_gram,
)
from gmdual.pipeline.report_builder import ReportBuilder, validate_report
from gmdual.presentation import (
    GeneratorSet,
    InstanceLoader,
    SpectrumInstance,
    build_connection,
    build_generators,
    check_grading,
    curvature_check,
    jacobian_identity_check,
    lattice_stability_check,
    phi_calibrate,
    presentation_of,
    validate,
)

logger = get_logger(__name__)


class VerificationRunner:
    """
    Class for running every check on an instance and collecting a report.

    A stage that raises VerificationError becomes an ERROR record and the
    remaining independent stages still run.
    """

    def __init__(self, loader: Optional[InstanceLoader] = None):
        """
        Initialize the VerificationRunner.

        Args:
            loader: Instance loader used by run_file.
        """
        self.loader = loader or InstanceLoader()

    def run_file(self, path: str) -> Dict[str, Any]:
        """
        Load an instance file and verify it.

        Raises:
            ValidationError: If the file cannot be read or is not an InstanceFile.
        """
        return self.run(self.loader.load(path))

    def run(self, instance: SpectrumInstance) -> Dict[str, Any]:
        """
        Run the verification battery on an instance.

        Args:
            instance: Spectral data.

        Returns:
            Dict[str, Any]: The report, see ReportBuilder.build.
        """
        report = ReportBuilder(instance.to_dict())
        log_execution_context(logger, instance.to_dict())
        report.start_timing("total")

        report.start_timing("validate")
        validation = validate(instance)
        report.add_checks(validation.checks)
        report.end_timing("validate")
        if not validation.passed:
            logger.warning("Validation failed, skipping the remaining stages")
            return self._finish(report)
        if instance.is_degenerate:
            logger.info("n = 1 is degenerate, skipping the remaining stages")
            return self._finish(report)

        gens = self._stage(report, "generators", "transpose_formulas", lambda: build_generators(instance))
        if gens is None:
            return self._finish(report)
        report.add_check(CheckResult("transpose_formulas", True))

        self._stage(report, "connection", "curvature", lambda: self._curvature(report, instance, BASIS_OMEGA))
        self._run_presentation_stages(report, instance, gens)
        self._run_duality_stages(report, instance, gens)

        sign = (-1) ** (instance.n - 1)
        bases = [BASIS_OMEGA] + ([BASIS_OMEGA_TILDE] if instance.nu_tilde is not None else [])
        for basis in bases:
            if basis == BASIS_OMEGA_TILDE:
                self._stage(report, "connection_omega_tilde", "curvature_omega_tilde",
                            lambda: self._curvature(report, instance, basis))
            self._run_pairing_stages(report, instance, basis, sign)

        report.set_convention("p1prime_constant", P1_PRIME_CONSTANT)
        report.set_convention("iota_variable", IOTA_VARIABLE)
        return self._finish(report)

    def solve_gram(self, instance: SpectrumInstance, basis: str = BASIS_OMEGA) -> FlatGramSolution:
        """
        Solve for the Gram matrix of one basis without the rest of the battery.

        Raises:
            ValidationError: If the basis needs nu_tilde and the instance has none.
            VerificationError: If the solver fails.
        """
        conn = build_connection(instance, basis)
        return solve_flat_gram(conn, (-1) ** (instance.n - 1))

    def _stage(self, report: ReportBuilder, label: str, check_name: str, fn: Callable[[], Any]) -> Any:
        report.start_timing(label)
        try:
            return fn()
        except VerificationError as e:
            report.record_error(e.check or check_name, e)
            return None
        finally:
            report.end_timing(label)

    def _finish(self, report: ReportBuilder) -> Dict[str, Any]:
        report.end_timing("total")
        result = report.build()
        validate_report(result)
        logger.info(f"Verification finished with status {result['status']}")
        return result

    def _curvature(self, report: ReportBuilder, instance: SpectrumInstance, basis: str) -> None:
        residual = curvature_check(build_connection(instance, basis))
        nonzero = [f"({i + 1}, {j + 1}): {residual[i, j]}"
                   for i in range(residual.rows) for j in range(residual.cols) if residual[i, j] != 0]
        name = "curvature" if basis == BASIS_OMEGA else f"curvature_{basis}"
        report.add_check(CheckResult(name, not nonzero, "; ".join(nonzero)))

    def _run_presentation_stages(self, report: ReportBuilder, instance: SpectrumInstance, gens: GeneratorSet) -> None:
        presentation = self._stage(report, "presentation", "presentation", lambda: presentation_of(gens))
        if presentation is None:
            return

        calibration = self._stage(report, "calibration", "phi_calibrate",
                                  lambda: phi_calibrate(instance, gens, presentation))
        if calibration is not None:
            report.add_check(CheckResult("phi_calibrate", calibration.residual_zero, f"sign {calibration.sign:+d}"))
            report.set_convention("phi_sign", calibration.sign)

        report.start_timing("lattice")
        report.add_check(jacobian_identity_check(gens, presentation))
        report.add_checks(lattice_stability_check(gens, presentation))
        report.add_check(check_grading(gens))
        report.end_timing("lattice")

    def _run_duality_stages(self, report: ReportBuilder, instance: SpectrumInstance, gens: GeneratorSet) -> None:
        report.start_timing("duality")
        report.add_checks(duality_results(gens))
        report.end_timing("duality")

        phi = self._stage(report, "phi_welldefined", "phi_welldefined", lambda: check_phi_welldefined(gens))
        if phi is not None:
            report.add_checks(check.to_result() for check in phi.checks)
            report.set_convention("iota_twist", phi.convention)
            report.set_convention("iota_twist_readings", dict(phi.readings))
            report.set_convention("iota_twist_readings_agree", phi.twisted_readings_agree)

        sign = self._stage(report, "duality_sign", "duality_sign", lambda: duality_sign(instance))
        if sign is not None:
            report.add_check(CheckResult("duality_sign", True, f"{sign:+d}"))
            report.set_convention("duality_sign", sign)

    def _run_pairing_stages(self, report: ReportBuilder, instance: SpectrumInstance, basis: str, sign: int) -> None:
        prefix = f"gram_{basis}"
        solution = self._stage(report, prefix, prefix, lambda: solve_flat_gram(build_connection(instance, basis), sign))
        if solution is None:
            return
        report.add_check(CheckResult(prefix, solution.dimension == 1,
                                     f"dimension {solution.dimension} under {solution.convention}"))
        report.add_gram(basis, solution)
        if basis == BASIS_OMEGA:
            report.set_convention("pairing_convention", solution.convention)
            report.set_convention("pairing_untwisted_control", solution.control_dimension)

        gram = solution.gram
        n = instance.n
        report.start_timing(f"{prefix}_checks")
        results: List[CheckResult] = [
            CheckResult(f"{prefix}_symmetry", check_symmetry(gram, n)),
            CheckResult(f"{prefix}_homogeneity", check_homogeneity(gram, n)),
        ]
        for which in (LATTICE_G0_STAR, LATTICE_G0_LOG):
            try:
                results.append(CheckResult(f"{prefix}_lattice_compat_{which}", check_lattice_compat(gram, which=which)))
            except VerificationError as e:
                report.add_checks(results)
                results = []
                report.record_error(f"{prefix}_lattice_compat_{which}", e)
        try:
            induced = induced_S0(gram)
            results.append(CheckResult(f"{prefix}_induced_S0", induced.passed,
                                       f"symmetric {induced.symmetric}, det {induced.determinant}"))
        except VerificationError as e:
            report.add_checks(results)
            results = []
            report.record_error(f"{prefix}_induced_S0", e)
        results.append(CheckResult(f"{prefix}_pole_orders", check_pole_orders(gram, n)))
        results.append(CheckResult(f"{prefix}_nondegenerate", check_nondegenerate(gram)))
        report.add_checks(results)
        report.end_timing(f"{prefix}_checks")


def exit_code(report: Dict[str, Any]) -> int:
    """0 for an overall PASS, 1 for any FAIL or ERROR."""
    return EXIT_PASS if report["status"] == STATUS_PASS else EXIT_FAIL


def verify_file(path: str) -> Dict[str, Any]:
    """Load and verify one instance file with a fresh runner."""
    return VerificationRunner().run_file(path)
