"""
DOF-scaling benchmark of the geometric and traditional pipelines.

For every requested dof a snake robot (and its DH twin for method "dh") is
built, a joint state is drawn from a generator seeded with the dof, and the
requested quantity is timed with ``time.perf_counter_ns``. Each timed value
is compared bit-for-bit with a reference evaluated outside the loop.
"""

import os
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Callable, Iterator, List, Optional, Sequence

import numpy as np

from poe_robotics.config import CONFIG
from poe_robotics.dh_baseline import (
    dh_coriolis_matrix,
    dh_forward_kinematics,
    dh_gravity_vector,
    dh_hybrid_jacobian,
    dh_mass_matrix,
    snake_to_dh,
)
from poe_robotics.dynamics import coriolis_matrix, gravity_vector, mass_matrix
from poe_robotics.errors import BenchmarkIntegrityError
from poe_robotics.kinematics_poe import forward_kinematics, hybrid_jacobian
from poe_robotics.logging_utils.logging_config import get_logger
from poe_robotics.robots import make_snake

logger = get_logger("poe_robotics.bench")

QUANTITIES = ("fk", "hybrid_jacobian", "mass", "gravity", "coriolis")
METHODS = ("poe", "dh")


@dataclass(frozen=True)
class BenchResult:
    """
    Timing statistics of one (quantity, method, dof) cell, in nanoseconds.

    The percentiles are taken with nearest-rank selection, so every field
    is one of the measured integer durations.
    """

    quantity: str
    method: str
    dof: int
    reps: int
    median_ns: int
    p10_ns: int
    p90_ns: int

    def __post_init__(self):
        if self.quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {self.quantity!r}; expected one of {QUANTITIES}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.dof < 1:
            raise ValueError(f"dof must be at least 1 (got {self.dof})")
        if self.reps < 1:
            raise ValueError(f"reps must be at least 1 (got {self.reps})")
        if not self.p10_ns <= self.median_ns <= self.p90_ns:
            raise ValueError(
                f"percentiles out of order: p10 {self.p10_ns}, median {self.median_ns}, p90 {self.p90_ns}"
            )


def parse_dof_range(text: str) -> List[int]:
    """
    Parse ``start:stop:step`` (stop inclusive) or a comma-separated list.

    Examples:
        >>> parse_dof_range("2:8:2")
        [2, 4, 6, 8]
        >>> parse_dof_range("3,5")
        [3, 5]
    """
    try:
        if ":" in text:
            parts = [int(part) for part in text.split(":")]
            if len(parts) == 2:
                parts.append(1)
            if len(parts) != 3 or parts[2] < 1:
                raise ValueError
            start, stop, step = parts
            values = list(range(start, stop + 1, step))
        else:
            values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"invalid dof range {text!r}; expected start:stop:step or a comma-separated list")
    if not values or min(values) < 1:
        raise ValueError(f"dof range {text!r} must contain only values >= 1")
    return values


def make_workload(quantity: str, method: str, dof: int) -> Callable[[], Any]:
    """
    Zero-argument callable evaluating ``quantity`` with ``method`` for snake(dof).

    The joint state is drawn from ``numpy.random.default_rng(dof)``, so both
    methods see identical inputs at a given dof.
    """
    if quantity not in QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}; expected one of {QUANTITIES}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    rng = np.random.default_rng(dof)
    q = rng.uniform(-np.pi, np.pi, dof)
    qdot = rng.uniform(-1.0, 1.0, dof)

    if method == "poe":
        model = make_snake(dof)
        workloads = {
            "fk": lambda: forward_kinematics(model, q).matrix(),
            "hybrid_jacobian": lambda: hybrid_jacobian(model, q).matrix,
            "mass": lambda: mass_matrix(model, q),
            "gravity": lambda: gravity_vector(model, q),
            "coriolis": lambda: coriolis_matrix(model, q, qdot),
        }
    else:
        dh = snake_to_dh(dof)
        workloads = {
            "fk": lambda: dh_forward_kinematics(dh, q).matrix(),
            "hybrid_jacobian": lambda: dh_hybrid_jacobian(dh, q).matrix,
            "mass": lambda: dh_mass_matrix(dh, q),
            "gravity": lambda: dh_gravity_vector(dh, q),
            "coriolis": lambda: dh_coriolis_matrix(dh, q, qdot),
        }
    return workloads[quantity]


@contextmanager
def pinned_to_one_cpu(enabled: bool = True) -> Iterator[None]:
    """
    Restrict the process to a single logical CPU for the duration of the block.

    A no-op where ``os.sched_setaffinity`` is unavailable.
    """
    if not enabled or not hasattr(os, "sched_setaffinity"):
        yield
        return
    previous = os.sched_getaffinity(0)
    cpu = min(previous)
    try:
        os.sched_setaffinity(0, {cpu})
        logger.debug(f"Pinned benchmark to CPU {cpu}")
    except OSError as e:
        logger.warning(f"Could not pin benchmark to one CPU: {e}")
    try:
        yield
    finally:
        try:
            os.sched_setaffinity(0, previous)
        except OSError as e:
            logger.warning(f"Could not restore CPU affinity: {e}")


def time_workload(workload: Callable[[], Any], reps: int, warmup: int) -> np.ndarray:
    """
    Durations in ns of ``reps`` calls after ``warmup`` untimed ones.

    Raises:
        BenchmarkIntegrityError: If any timed result differs from the reference.
    """
    reference = workload()
    for _ in range(warmup):
        workload()
    durations = np.empty(reps, dtype=np.int64)
    for i in range(reps):
        start = time.perf_counter_ns()
        value = workload()
        durations[i] = time.perf_counter_ns() - start
        if not np.array_equal(value, reference):
            raise BenchmarkIntegrityError(f"timed evaluation {i} differs from the reference value")
    return durations


def run_benchmark(
    quantity: str,
    method: str,
    dof_list: Sequence[int],
    reps: Optional[int] = None,
    warmup: Optional[int] = None,
    pin_cpu: bool = False,
) -> List[BenchResult]:
    """
    Time one quantity of one pipeline for every dof in ``dof_list``.

    Args:
        quantity: fk, hybrid_jacobian, mass, gravity or coriolis.
        method: poe or dh.
        dof_list: Robot sizes to benchmark, each >= 1.
        reps: Timed repetitions per dof (>= 3), default CONFIG.benchmark.reps.
        warmup: Untimed repetitions per dof, default CONFIG.benchmark.warmup.
        pin_cpu: Run the timing loops on a single logical CPU.

    Returns:
        List[BenchResult]: One result per dof, in the order given.

    Raises:
        ValueError: On an unknown quantity/method, reps < 3 or dof < 1.
        BenchmarkIntegrityError: If a timed evaluation changes its value.
    """
    reps = CONFIG.benchmark.reps if reps is None else reps
    warmup = CONFIG.benchmark.warmup if warmup is None else warmup
    if quantity not in QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}; expected one of {QUANTITIES}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if reps < 3:
        raise ValueError(f"reps must be at least 3 (got {reps})")
    if warmup < 0:
        raise ValueError(f"warmup must be non-negative (got {warmup})")
    if not dof_list or min(dof_list) < 1:
        raise ValueError(f"dof list must be non-empty with every dof >= 1 (got {list(dof_list)})")

    logger.info(f"Benchmarking {quantity} ({method}) over {len(dof_list)} robot sizes, {reps} reps each")
    results = []
    with pinned_to_one_cpu(pin_cpu):
        for dof in dof_list:
            durations = time_workload(make_workload(quantity, method, dof), reps, warmup)
            p10, median, p90 = (
                int(value) for value in np.percentile(durations, [10, 50, 90], method="nearest")
            )
            results.append(BenchResult(quantity, method, int(dof), reps, median, p10, p90))
            logger.debug(f"{quantity}/{method} dof={dof}: median {median} ns")
    return results
