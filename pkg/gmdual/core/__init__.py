"""
Core utilities and configuration for the gmdual package.
"""

from gmdual.core.config import get_config, get_config_value, set_config_value
from gmdual.core.logging_config import get_logger, configure_logging
from gmdual.core.utils import parse_rational, format_rational, load_structured_file
from gmdual.core.error_handler import (
    ValidationError,
    OpSyntaxError,
    ConfigurationError,
    VerificationError,
)
