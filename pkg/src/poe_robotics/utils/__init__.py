"""
Path Utilities Package

Cross-platform path handling for the poe_robotics toolkit.

Available Functions:
- resolve_path(): Resolve relative and absolute paths with base directory support
- ensure_directory(): Create directories and parent directories as needed
- get_script_directory(): Package directory for both regular and frozen execution
- open_output(): Open a file target or standard output (``-``) for writing
"""

from .path_utils import resolve_path, ensure_directory, get_script_directory, open_output

__all__ = [
    "resolve_path",
    "ensure_directory",
    "get_script_directory",
    "open_output",
]
