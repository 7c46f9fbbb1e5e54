from dataclasses import dataclass
from typing import Optional


@dataclass
class AppConfig:
    """
    Application-level configuration.

    log_dir enables file logging when set and must then be an absolute path,
    e.g. "/home/me/poe_logs". pin_benchmark_cpu restricts the benchmark
    process to a single CPU where the platform allows it.
    """

    log_dir: Optional[str] = None
    pin_benchmark_cpu: bool = True


# Global application config instance
APP_CONFIG = AppConfig()
