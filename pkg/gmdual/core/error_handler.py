"""
Error handling module.

This module defines the exceptions raised across gmdual and small helpers
for validating dictionaries of input and configuration data.

Failed identity checks are not exceptions: they are recorded in reports.
Exceptions are reserved for malformed input (ValidationError and its parser
subclass OpSyntaxError), broken configuration (ConfigurationError) and the
hard errors of the verification battery (VerificationError).
"""

import logging
from typing import Dict, Any, Optional, Iterable

logger = logging.getLogger(__name__)


class ValidationError(Exception):
    """
    Exception raised for malformed input.

    Attributes:
        message: Error message.
        field: Field that failed validation.
        value: Value that failed validation.
    """

    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        value: Optional[Any] = None
    ):
        self.message = message
        self.field = field
        self.value = value

        detailed_message = f"Validation Error: {message}"
        if field:
            detailed_message += f" (Field: {field})"

        super().__init__(detailed_message)


class OpSyntaxError(ValidationError):
    """
    Exception raised by the operator-expression parser.

    Attributes:
        message: Error message.
        line: 1-based line of the offending token.
        column: 1-based column of the offending token.
        expected: Sorted token descriptions that would have been accepted.
    """

    def __init__(
        self,
        message: str,
        line: int = 1,
        column: int = 1,
        expected: Optional[Iterable[str]] = None
    ):
        self.line = line
        self.column = column
        self.expected = sorted(set(expected or []))

        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f"; expected one of: {', '.join(self.expected)}"

        super().__init__(detail, field="expression")
        self.message = message


class ConfigurationError(Exception):
    """
    Exception raised for configuration errors.

    Attributes:
        message: Error message.
        component: Component that has a configuration error.
        missing_keys: Keys that are missing from the configuration.
    """

    def __init__(
        self,
        message: str,
        component: Optional[str] = None,
        missing_keys: Optional[list] = None
    ):
        self.message = message
        self.component = component
        self.missing_keys = missing_keys or []

        detailed_message = f"Configuration Error: {message}"
        if component:
            detailed_message += f" (Component: {component})"
        if missing_keys:
            detailed_message += f" (Missing Keys: {', '.join(missing_keys)})"

        super().__init__(detailed_message)


class VerificationError(Exception):
    """
    Exception raised when a computation cannot produce a meaningful result,
    e.g. no sign reconciles the presentation with the connection, or the
    flatness system has no solution.

    Attributes:
        message: Error message.
        check: Name of the check or construction that failed.
        detail: Optional printed residual or witness.
    """

    def __init__(
        self,
        message: str,
        check: Optional[str] = None,
        detail: Optional[str] = None
    ):
        self.message = message
        self.check = check
        self.detail = detail

        detailed_message = f"Verification Error: {message}"
        if check:
            detailed_message += f" (Check: {check})"
        if detail:
            detailed_message += f" (Detail: {detail})"

        super().__init__(detailed_message)


def validate_required_fields(
    data: Dict[str, Any],
    required_fields: list,
    component: str = "Unknown"
) -> None:
    """
    Validate that required fields are present in the data.

    Args:
        data: Data to validate.
        required_fields: List of required field names.
        component: Component name for error reporting.

    Raises:
        ValidationError: If a required field is missing.
    """
    missing_fields = [field for field in required_fields if field not in data]

    if missing_fields:
        logger.error(f"{component}: missing required fields {missing_fields}")
        raise ValidationError(
            message=f"Missing required fields: {', '.join(missing_fields)}",
            field=missing_fields[0]
        )


def validate_configuration(
    config: Dict[str, Any],
    required_keys: list,
    component: str = "Unknown"
) -> None:
    """
    Validate that required keys are present in a configuration section.

    Args:
        config: Configuration section to validate.
        required_keys: List of required key names.
        component: Component name for error reporting.

    Raises:
        ConfigurationError: If a required key is missing.
    """
    missing_keys = [key for key in required_keys if key not in config]

    if missing_keys:
        raise ConfigurationError(
            message="Missing required configuration keys",
            component=component,
            missing_keys=missing_keys
        )
