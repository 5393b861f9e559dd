"""
Logging configuration for the gmdual package.

- Log level, format and destinations taken from the configuration
- Console output goes to stderr; stdout is reserved for reports
- Optional rotating log file
"""

import os
import sys
import logging
import logging.handlers
from typing import Dict, Any, Optional

LEVEL_MAP = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


def configure_logging(
    level: Optional[str] = None,
    log_file: Optional[str] = None,
    log_format: Optional[str] = None,
    log_to_console: Optional[bool] = None,
    log_to_file: Optional[bool] = None,
    max_bytes: int = 10485760,  # 10MB
    backup_count: int = 5
) -> None:
    """
    Configure the root logger.

    Arguments left as ``None`` fall back to the ``logging.*`` section of the
    configuration.

    Args:
        level (str, optional): Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file (str, optional): Path to the log file
        log_format (str, optional): Log message format
        log_to_console (bool, optional): Whether to log to stderr
        log_to_file (bool, optional): Whether to log to ``log_file``
        max_bytes (int): Maximum log file size before rotation
        backup_count (int): Number of rotated files to keep
    """
    from gmdual.core.config import get_config_value

    if level is None:
        level = get_config_value("logging.level", "WARNING")

    if log_file is None:
        log_file = get_config_value("logging.file", "gmdual.log")

    if log_format is None:
        log_format = get_config_value(
            "logging.format",
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        )

    if log_to_console is None:
        log_to_console = get_config_value("logging.to_console", True)

    if log_to_file is None:
        log_to_file = get_config_value("logging.to_file", False)

    root_logger = logging.getLogger()
    root_logger.setLevel(LEVEL_MAP.get(str(level).upper(), logging.INFO))

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    formatter = logging.Formatter(log_format)

    if log_to_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        root_logger.addHandler(console_handler)

    if log_to_file and log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir, exist_ok=True)

        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=max_bytes,
            backupCount=backup_count
        )
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger with the specified name.

    Args:
        name (str): Logger name

    Returns:
        logging.Logger: Logger instance
    """
    return logging.getLogger(name)


def log_execution_context(logger: logging.Logger, context: Dict[str, Any]) -> None:
    """
    Log execution context information, one key per line.

    Args:
        logger (logging.Logger): Logger instance
        context (Dict[str, Any]): Context information to log
    """
    logger.info("Execution context:")
    for key, value in context.items():
        logger.info(f"  {key}: {value}")
