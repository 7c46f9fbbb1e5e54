"""
Logging Utilities Package

Centralized logging configuration for the poe_robotics toolkit.

Available Functions:
- get_logger(): Create or retrieve configured logger instances
- add_file_handler(): Opt-in file output into a log directory
- set_console_level(): Dynamically adjust console log levels
- is_console_handler(): Tell the toolkit's console handler from foreign ones

Usage:
    from poe_robotics.logging_utils import get_logger, set_console_level

    logger = get_logger('poe_robotics.sim')
    logger.info('Simulation started')
"""

from .logging_config import (
    get_logger,
    add_file_handler,
    set_console_level,
    is_console_handler,
    LOGGING_CONFIG,
    DEFAULT_LOG_DIR,
)

__all__ = [
    'get_logger',
    'add_file_handler',
    'set_console_level',
    'is_console_handler',
    'LOGGING_CONFIG',
    'DEFAULT_LOG_DIR',
]
