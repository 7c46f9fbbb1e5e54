"""
Benchmark package: DOF-scaling timing harness and its reports.
"""

from .harness import (
    METHODS,
    QUANTITIES,
    BenchResult,
    make_workload,
    parse_dof_range,
    pinned_to_one_cpu,
    run_benchmark,
    time_workload,
)
from .report import CSV_HEADER, ScalingFit, emit_csv, emit_scaling_fit, parse_csv, write_scaling_svg

__all__ = [
    "CSV_HEADER",
    "METHODS",
    "QUANTITIES",
    "BenchResult",
    "ScalingFit",
    "emit_csv",
    "emit_scaling_fit",
    "make_workload",
    "parse_csv",
    "parse_dof_range",
    "pinned_to_one_cpu",
    "run_benchmark",
    "time_workload",
    "write_scaling_svg",
]
