"""
Command-line interface for the gmdual package.

This module provides the CLI commands for the gmdual package:
- verify: Run every check on one instance file
- reduce: Print the Q-basis coefficients of an operator's class
- gram: Solve for the flat pairing in the omega or omega-tilde basis
- suite: Verify a directory of instance files

Exit codes: 0 when everything passes, 1 when a check fails, 2 on input errors.
Reports go to stdout, log messages to stderr.
"""

import json
import os
import sys
from typing import Any, Dict, Optional

import click

from gmdual import __version__
from gmdual.core.config import get_config_value
from gmdual.core.constants import (
    BASIS_OMEGA,
    DEFAULT_REPORT_FORMAT,
    EXIT_FAIL,
    EXIT_INPUT_ERROR,
    EXIT_PASS,
    SUPPORTED_BASES,
    SUPPORTED_REPORT_FORMATS,
)
from gmdual.core.error_handler import ConfigurationError, ValidationError, VerificationError
from gmdual.core.logging_config import configure_logging, get_logger

# Initialize logging
configure_logging()
logger = get_logger(__name__)

INSTANCE_PATH = click.Path(exists=True, file_okay=True, dir_okay=False, readable=True)


def _format_option(function):
    return click.option(
        '--format', 'output_format', type=click.Choice(SUPPORTED_REPORT_FORMATS),
        default=lambda: get_config_value("report.format", DEFAULT_REPORT_FORMAT),
        help='Report format: text or json (default: report.format from the configuration)'
    )(function)


def _fail_input(message: str) -> None:
    logger.error(message)
    click.echo(f"Error: {message}", err=True)
    sys.exit(EXIT_INPUT_ERROR)


def _load_valid_instance(instance_path: str):
    """Load an instance; exit 2 if the file is malformed, 1 if the spectrum is invalid."""
    from gmdual.presentation import load_instance, validate

    try:
        instance = load_instance(instance_path)
    except ValidationError as e:
        _fail_input(str(e))

    report = validate(instance)
    if not report.passed:
        for check in report.checks:
            if not check.passed:
                click.echo(f"[{check.status}] {check.name}  {check.detail}", err=True)
        click.echo("Error: instance fails validation", err=True)
        sys.exit(EXIT_FAIL)
    return instance


def _echo_json(data: Dict[str, Any]) -> None:
    click.echo(json.dumps(data, indent=2))


@click.group()
@click.version_option(version=__version__)
def main():
    """
    gmdual - Self-duality checks for Gauss-Manin systems of linear free divisors.

    Builds the operator presentation of a spectrum, verifies the duality
    identities exactly and solves for the flat pairing.
    """
    pass


@main.command()
@click.argument('instance_path', type=INSTANCE_PATH)
@_format_option
@click.option('-o', '--output', 'output_path', type=click.Path(file_okay=True, dir_okay=False),
              help='Also save the JSON report to this file')
def verify(instance_path: str, output_format: str, output_path: Optional[str] = None):
    """
    Run the full verification battery on an instance file.

    INSTANCE_PATH: Path to a JSON or YAML instance file

    Examples:
      gmdual verify gmdual/instances/n2.json
      gmdual verify my_spectrum.yaml --format json
    """
    from gmdual.pipeline import VerificationRunner, exit_code, render_json, render_text, save_report

    try:
        report = VerificationRunner().run_file(instance_path)
    except ValidationError as e:
        _fail_input(str(e))
    except ConfigurationError as e:
        _fail_input(str(e))

    click.echo(render_json(report) if output_format == "json" else render_text(report))
    if output_path:
        save_report(report, os.path.dirname(output_path) or ".", os.path.basename(output_path))
    sys.exit(exit_code(report))


@main.command()
@click.argument('instance_path', type=INSTANCE_PATH)
@click.argument('expr', type=str)
@_format_option
def reduce(instance_path: str, expr: str, output_format: str):
    """
    Reduce an operator to its coefficients on the basis Q_0..Q_(n-1).

    INSTANCE_PATH: Path to a JSON or YAML instance file

    EXPR: Operator in the theta/t/dtheta/dt language, e.g. "theta^2*t*dt*t*dt"
    """
    from gmdual.oplang import parse_operator
    from gmdual.presentation import build_generators, normal_form

    instance = _load_valid_instance(instance_path)
    try:
        op = parse_operator(expr)
        coefficients = normal_form(op, build_generators(instance))
    except ValidationError as e:
        _fail_input(str(e))
    except VerificationError as e:
        logger.error(str(e))
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_FAIL)

    strings = coefficients.to_strings()
    if output_format == "json":
        _echo_json({"expr": expr, "n": instance.n, "coefficients": strings})
    else:
        click.echo("(" + ", ".join(strings) + ")")
    sys.exit(EXIT_PASS)


@main.command()
@click.argument('instance_path', type=INSTANCE_PATH)
@click.option('--basis', type=click.Choice(SUPPORTED_BASES), default=BASIS_OMEGA,
              help='Basis of the Gram matrix (default: omega)')
@_format_option
def gram(instance_path: str, basis: str, output_format: str):
    """
    Solve for the flat pairing and print its normalized Gram matrix.

    INSTANCE_PATH: Path to a JSON or YAML instance file

    Examples:
      gmdual gram gmdual/instances/n3.json
      gmdual gram gmdual/instances/n4_tilde.json --basis omega_tilde
    """
    from gmdual.pipeline import VerificationRunner
    from gmdual.pipeline.report_builder import render_matrix

    instance = _load_valid_instance(instance_path)
    try:
        solution = VerificationRunner().solve_gram(instance, basis)
    except ValidationError as e:
        _fail_input(str(e))
    except VerificationError as e:
        logger.error(str(e))
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_FAIL)

    entries = solution.gram.to_strings()
    if output_format == "json":
        _echo_json({
            "basis": basis,
            "dimension": solution.dimension,
            "convention": solution.convention,
            "dimensions": dict(solution.dimensions),
            "shift": solution.gram.shift,
            "normalization": solution.gram.normalization,
            "entries": entries,
        })
    else:
        click.echo(f"Basis: {basis}")
        click.echo(f"Nullspace dimension: {solution.dimension}")
        click.echo(f"Convention: {solution.convention}")
        if solution.gram.shift:
            click.echo(f"Shift: {solution.gram.shift}")
        click.echo(f"Normalization: {solution.gram.normalization}")
        for line in render_matrix(entries, indent=""):
            click.echo(line)
    sys.exit(EXIT_PASS)


@main.command()
@click.option('--instances', 'instances_dir', type=click.Path(file_okay=False, dir_okay=True),
              help='Directory of instance files (default: the bundled instances)')
@click.option('-j', '--jobs', type=click.IntRange(min=1),
              help='Number of worker processes (default: suite.jobs from the configuration)')
@_format_option
def suite(instances_dir: Optional[str], jobs: Optional[int], output_format: str):
    """
    Verify every instance file in a directory.

    Only files directly inside the directory are run; the bundled negative
    controls in instances/invalid/ are therefore skipped unless named.

    Examples:
      gmdual suite
      gmdual suite --instances gmdual/instances/invalid --jobs 2
    """
    from gmdual.pipeline import BUNDLED_INSTANCES_DIR, SuiteRunner, render_suite_text, suite_exit_code

    directory = instances_dir or BUNDLED_INSTANCES_DIR
    try:
        result = SuiteRunner(jobs).run(directory)
    except ValidationError as e:
        _fail_input(str(e))

    if output_format == "json":
        _echo_json(result)
    else:
        click.echo(render_suite_text(result))
    sys.exit(suite_exit_code(result))


if __name__ == '__main__':
    main()
