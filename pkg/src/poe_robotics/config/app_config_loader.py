"""
App Config Loader Module

Dynamic loading of the application configuration from the root-level
``app_config`` directory. It supports both regular Python execution and
PyInstaller frozen applications, so the CLI reads the same settings in either
deployment.

The loader:
- Locates app_config/app_config.py at the project root
- Dynamically imports the configuration module
- Validates configuration values
- Raises clear errors for missing or misconfigured files
"""

import importlib.util
from pathlib import Path
from typing import Any, Optional

from poe_robotics.logging_utils.logging_config import get_logger
from poe_robotics.utils.path_utils import get_script_directory


def _project_root() -> Path:
    script_dir = get_script_directory()
    # Regular layout is <root>/src/poe_robotics; frozen apps keep app_config next to the executable
    if script_dir.name == "poe_robotics":
        return script_dir.parent.parent
    return script_dir


def load_app_config(app_config_path: Optional[Path] = None) -> Any:
    """
    Dynamically load the application configuration.

    The loading process:
    1. Determines the project root directory (unless a path is given)
    2. Locates app_config/app_config.py
    3. Dynamically imports the module
    4. Validates APP_CONFIG exists and has the required attributes
    5. Validates log_dir is an absolute path when set
    6. Returns the APP_CONFIG instance

    Args:
        app_config_path (Optional[Path]): Explicit location of app_config.py.

    Returns:
        Any: The APP_CONFIG instance from the loaded module

    Raises:
        FileNotFoundError: If app_config/app_config.py is not found
        ImportError: If the module cannot be imported
        AttributeError: If APP_CONFIG is missing from the module
        ValueError: If log_dir is set and not an absolute path
    """
    logger = get_logger("poe_robotics.app_config_loader")

    if app_config_path is None:
        project_root = _project_root()
        logger.debug(f"Project root: {project_root}")
        app_config_path = project_root / "app_config" / "app_config.py"
    app_config_path = Path(app_config_path)
    logger.debug(f"Looking for app_config at: {app_config_path}")

    if not app_config_path.exists():
        raise FileNotFoundError(
            f"App configuration file not found at: {app_config_path}\n"
            f"Expected location: <project root>/app_config/app_config.py"
        )

    try:
        spec = importlib.util.spec_from_file_location("app_config", app_config_path)
        if spec is None or spec.loader is None:
            raise ImportError(f"Could not create module spec for {app_config_path}")

        app_config_module = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(app_config_module)
    except Exception as e:
        raise ImportError(f"Failed to import app_config module from {app_config_path}: {e}")

    if not hasattr(app_config_module, 'APP_CONFIG'):
        raise AttributeError(
            f"APP_CONFIG not found in {app_config_path}. "
            "The module must define APP_CONFIG = AppConfig()"
        )

    app_config = app_config_module.APP_CONFIG
    logger.debug(f"Loaded APP_CONFIG: {app_config}")

    for attribute in ("log_dir", "pin_benchmark_cpu"):
        if not hasattr(app_config, attribute):
            raise ValueError(
                f"APP_CONFIG missing {attribute} attribute. "
                f"AppConfig must have a {attribute} field."
            )

    if app_config.log_dir is not None and not Path(app_config.log_dir).is_absolute():
        raise ValueError(
            f"APP_CONFIG.log_dir must be an absolute path or None (got: {app_config.log_dir!r})\n"
            f"Example (Linux/macOS): '/home/me/poe_logs'"
        )

    logger.debug("Configuration validation successful")
    return app_config
