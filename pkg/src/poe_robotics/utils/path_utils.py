"""
Path Utilities Module

Cross-platform path handling for the poe_robotics toolkit. Supports both
regular Python execution and PyInstaller frozen applications, so shipped
robot descriptions and the root ``app_config`` directory resolve the same way
in either deployment.

The utilities handle:
- Path resolution with proper base directory handling
- Directory creation with parent directory support
- Package directory detection for frozen applications
- Output targets where ``-`` means standard output
"""

import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional, TextIO, Union


def resolve_path(path_input: Union[str, Path], base_dir: Optional[Path] = None) -> Path:
    """
    Resolve a path, handling both relative and absolute paths.

    Args:
        path_input (Union[str, Path]): Input path as string or Path object
        base_dir (Optional[Path]): Base directory for relative paths.
                                   Defaults to the package directory if None

    Returns:
        Path: Resolved Path object (always absolute)

    Example:
        >>> resolve_path("robots/descriptions/franka.json")
        PosixPath('/path/to/src/poe_robotics/robots/descriptions/franka.json')
    """
    if base_dir is None:
        base_dir = get_script_directory()

    if isinstance(path_input, str):
        path_input = Path(path_input)

    if path_input.is_absolute():
        return path_input.resolve()

    return (base_dir / path_input).resolve()


def ensure_directory(directory_path: Union[str, Path]) -> Path:
    """
    Ensure a directory exists, creating it and its parents if necessary.

    Args:
        directory_path (Union[str, Path]): Path to the directory to ensure

    Returns:
        Path: Path object pointing to the ensured directory

    Raises:
        OSError: If the directory cannot be created
    """
    directory_path = Path(directory_path)

    if not directory_path.exists():
        directory_path.mkdir(parents=True, exist_ok=True)

    return directory_path


def get_script_directory() -> Path:
    """
    Get the poe_robotics package directory.

    Detection logic:
    - For PyInstaller frozen apps: Uses sys.executable parent directory
    - For regular Python: the package directory containing this ``utils`` package

    Returns:
        Path: Path object pointing to the package directory
    """
    if getattr(sys, 'frozen', False):
        # Running as PyInstaller bundle
        return Path(sys.executable).parent
    else:
        return Path(__file__).resolve().parent.parent


@contextmanager
def open_output(target: Union[str, Path]) -> Iterator[TextIO]:
    """
    Open a text output target for writing; ``"-"`` selects standard output.

    Parent directories of file targets are created on demand. Standard
    output is flushed but never closed.
    """
    if str(target) == "-":
        yield sys.stdout
        sys.stdout.flush()
        return

    path = Path(target)
    if path.parent != Path(""):
        ensure_directory(path.parent)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        yield handle
