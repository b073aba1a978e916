import logging
import sys
from typing import Optional

PACKAGE_LOGGER = "omega_ideals"
LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def setup_logging(
        log_level: str = "WARNING",
        log_format: Optional[str] = None,
        include_timestamp: bool = False
) -> None:
    """
    Configure the package logger for the command line tool.

    Args:
        log_level: One of LEVELS, case-insensitive
        log_format: Custom log format string. If None, uses default format.
        include_timestamp: Whether to include timestamp in log messages

    Only loggers under `omega_ideals` are touched, and records go to stderr so that
    stdout carries nothing but reports. Calling it again replaces the handler.
    """
    level = log_level.upper()
    if level not in LEVELS:
        raise ValueError(f"Unknown log level '{log_level}', expected one of {', '.join(LEVELS)}")
    if log_format is None:
        log_format = "%(levelname)s %(name)s [%(filename)s:%(lineno)d] %(message)s"
        if include_timestamp:
            log_format = "%(asctime)s " + log_format

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(log_format))
    package = logging.getLogger(PACKAGE_LOGGER)
    package.handlers = [handler]
    package.setLevel(getattr(logging, level))
    package.propagate = False


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
