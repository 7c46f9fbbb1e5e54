"""
Logging Configuration Module

This module provides centralized logging configuration for the poe_robotics
toolkit. Every library module logs through a child of the configured
``poe_robotics`` logger, so handlers are attached exactly once and the CLI
can adjust verbosity in a single place.

Key Features:
- Centralized logging configuration management
- Per-logger configuration with dotted-name inheritance
- Configurable log levels (DEBUG, INFO, WARNING, ERROR, CRITICAL)
- Console output on stderr (stdout is reserved for data written with ``--out -``)
- Opt-in file output with automatic log directory creation
- Dynamic log level adjustment

Configuration Structure:
- LOGGING_CONFIG: Dictionary defining logger configurations
- DEFAULT_LOG_DIR: Default directory for log files
- DEFAULT_LOG_FORMAT: Standard log message format
- DEFAULT_DATE_FORMAT: Standard timestamp format
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Union


# ============================================================================
# LOGGING CONFIGURATION
# ============================================================================
LOGGING_CONFIG = {
    # Library and CLI logger; library modules use "poe_robotics.<module>" children
    "poe_robotics": {
        "level": "INFO",
        "log_filename": "poe_robotics.log",
        "console_output": True,
        "file_output": False,
    },
}

# ============================================================================
# DEFAULT SETTINGS
# ============================================================================
DEFAULT_LOG_DIR = "logs"  # Used when file output is enabled without an explicit directory
DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DEFAULT_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _configured_root(logger_name: str) -> Optional[str]:
    """Return the LOGGING_CONFIG key owning ``logger_name`` (exact or dotted prefix)."""
    if logger_name in LOGGING_CONFIG:
        return logger_name
    parts = logger_name.split(".")
    for cut in range(len(parts) - 1, 0, -1):
        candidate = ".".join(parts[:cut])
        if candidate in LOGGING_CONFIG:
            return candidate
    return None


def is_console_handler(handler: logging.Handler) -> bool:
    """
    True for the plain stderr StreamHandler installed by :func:`get_logger`.

    Subclasses (file handlers, log-capture handlers of test runners) are
    excluded so they are never counted or retargeted as the console.
    """
    return type(handler) is logging.StreamHandler


def get_logger(
    logger_name: str,
    log_dir: Optional[Path] = None,
    console_level: Optional[str] = None,
    file_level: Optional[str] = None,
) -> logging.Logger:
    """
    Get or create a configured logger instance.

    Loggers named in LOGGING_CONFIG receive console (and optionally file)
    handlers. Dotted children of a configured logger, e.g.
    ``poe_robotics.dynamics``, are returned unconfigured and propagate to
    their configured parent, which is set up on first use.

    Args:
        logger_name (str): Name of the logger. Either a key of LOGGING_CONFIG
                           or a dotted child of one.
        log_dir (Optional[Path]): Directory for log files when file output is
                                  enabled. Defaults to DEFAULT_LOG_DIR in CWD.
        console_level (Optional[str]): Override for console log level.
        file_level (Optional[str]): Override for file log level.

    Returns:
        logging.Logger: Configured logger instance

    Example:
        >>> logger = get_logger('poe_robotics.kinematics_poe')
        >>> logger.debug('partial products computed')
    """
    root_name = _configured_root(logger_name)
    if root_name is not None and root_name != logger_name:
        get_logger(root_name, log_dir=log_dir, console_level=console_level, file_level=file_level)
        child = logging.getLogger(logger_name)
        child.propagate = True
        return child

    config = LOGGING_CONFIG.get(logger_name, {})

    default_level = config.get("level", "INFO")
    console_level = console_level or default_level
    file_level = file_level or default_level

    logger = logging.getLogger(logger_name)

    # Only configure if not already configured (avoid duplicate handlers).
    # Handlers attached by other tools, e.g. test log capture, do not count.
    if not any(is_console_handler(h) or isinstance(h, logging.FileHandler) for h in logger.handlers):
        logger.setLevel(logging.DEBUG)  # Handlers do the filtering
        logger.propagate = False

        formatter = logging.Formatter(fmt=DEFAULT_LOG_FORMAT, datefmt=DEFAULT_DATE_FORMAT)

        if config.get("console_output", True):
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(getattr(logging, console_level.upper()))
            console_handler.setFormatter(formatter)
            logger.addHandler(console_handler)

        if config.get("file_output", False):
            add_file_handler(
                logger,
                log_dir if log_dir is not None else Path.cwd() / DEFAULT_LOG_DIR,
                level=file_level,
                log_filename=config.get("log_filename", f"{logger_name}.log"),
            )

    return logger


def add_file_handler(
    logger: logging.Logger,
    log_dir: Union[str, Path],
    level: str = "DEBUG",
    log_filename: Optional[str] = None,
) -> Path:
    """
    Attach a UTF-8 file handler to ``logger`` writing into ``log_dir``.

    The directory is created if needed. Calling this twice for the same file
    does not add a second handler.

    Returns:
        Path: The log file path.
    """
    log_dir = Path(log_dir)
    log_dir.mkdir(parents=True, exist_ok=True)

    if log_filename is None:
        log_filename = LOGGING_CONFIG.get(logger.name, {}).get("log_filename", f"{logger.name}.log")
    log_file = (log_dir / log_filename).resolve()

    for handler in logger.handlers:
        if isinstance(handler, logging.FileHandler) and Path(handler.baseFilename) == log_file:
            return log_file

    file_handler = logging.FileHandler(log_file, encoding='utf-8')
    file_handler.setLevel(getattr(logging, level.upper()))
    file_handler.setFormatter(logging.Formatter(fmt=DEFAULT_LOG_FORMAT, datefmt=DEFAULT_DATE_FORMAT))
    logger.addHandler(file_handler)
    return log_file


def set_console_level(logger: logging.Logger, level: str) -> None:
    """
    Update the console handler's log level for an existing logger.

    Typically used with the CLI ``--debug`` flag. File handlers are left
    unchanged; if no console handler is found nothing happens.

    Args:
        logger (logging.Logger): Logger instance to update
        level (str): New console level, case-insensitive
    """
    log_level = getattr(logging, level.upper())
    for handler in logger.handlers:
        if is_console_handler(handler):
            handler.setLevel(log_level)
            break
