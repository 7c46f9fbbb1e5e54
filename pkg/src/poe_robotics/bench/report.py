"""
Benchmark reporting: CSV documents, scaling fits and an SVG chart.
"""

from dataclasses import dataclass
from itertools import groupby
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np
from matplotlib.figure import Figure

from poe_robotics.bench.harness import BenchResult
from poe_robotics.config import CONFIG
from poe_robotics.errors import InsufficientDataError
from poe_robotics.logging_utils.logging_config import get_logger
from poe_robotics.utils.path_utils import ensure_directory

logger = get_logger("poe_robotics.bench")

CSV_HEADER = "quantity,method,dof,reps,median_ns,p10_ns,p90_ns"

# Quantities whose cost also gets a full quadratic fit in dof
QUADRATIC_QUANTITIES = ("mass", "coriolis")


def _sort_key(result: BenchResult) -> Tuple[str, str, int]:
    return result.quantity, result.method, result.dof


def emit_csv(results: Iterable[BenchResult]) -> str:
    """
    CSV document with one row per result, ordered by (quantity, method, dof).

    The output depends only on the result values, byte for byte.
    """
    lines = [CSV_HEADER]
    for r in sorted(results, key=_sort_key):
        lines.append(f"{r.quantity},{r.method},{r.dof},{r.reps},{r.median_ns},{r.p10_ns},{r.p90_ns}")
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> List[BenchResult]:
    """
    Parse a document written by :func:`emit_csv`.

    Raises:
        ValueError: On a wrong header or a malformed row (1-based line number in the message).
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0].strip() != CSV_HEADER:
        raise ValueError(f"expected header {CSV_HEADER!r}")
    results = []
    for number, line in enumerate(lines[1:], start=2):
        fields = line.strip().split(",")
        if len(fields) != 7:
            raise ValueError(f"line {number}: expected 7 fields, got {len(fields)}")
        quantity, method, *numbers = fields
        try:
            dof, reps, median, p10, p90 = (int(value) for value in numbers)
        except ValueError:
            raise ValueError(f"line {number}: expected integer fields, got {numbers}")
        results.append(BenchResult(quantity, method, dof, reps, median, p10, p90))
    return results


@dataclass(frozen=True)
class ScalingFit:
    """
    Least-squares fit of median time against dof for one (quantity, method).

    ``quadratic_coefficient``/``quadratic_r2`` describe the full quadratic
    ``a*dof^2 + b*dof + c`` (leading coefficient ``a`` and that fit's R^2)
    and are set for mass and coriolis only.
    """

    quantity: str
    method: str
    slope: float
    intercept: float
    r2: float
    quadratic_coefficient: Optional[float] = None
    quadratic_r2: Optional[float] = None


def _polynomial_fit(x: np.ndarray, y: np.ndarray, degree: int) -> Tuple[np.ndarray, float]:
    """
    Least-squares polynomial of ``degree`` through (x, y) and its R^2.

    Returns:
        Tuple[np.ndarray, float]: Coefficients, highest power first, and R^2.
    """
    coefficients = np.polyfit(x, y, degree)
    residual = float(np.sum((y - np.polyval(coefficients, x)) ** 2))
    total = float(np.sum((y - np.mean(y)) ** 2))
    if total == 0.0:
        # Constant data is fitted exactly by the horizontal line
        r2 = 1.0 if residual <= 1e-12 * max(1.0, float(np.sum(y ** 2))) else 0.0
    else:
        r2 = 1.0 - residual / total
    return coefficients, r2


def emit_scaling_fit(results: Iterable[BenchResult]) -> List[ScalingFit]:
    """
    Fit median_ns against dof for every (quantity, method) group.

    Raises:
        InsufficientDataError: If a group has fewer than
                               CONFIG.benchmark.min_fit_points distinct dofs.
    """
    fits = []
    ordered = sorted(results, key=_sort_key)
    for (quantity, method), group in groupby(ordered, key=lambda r: (r.quantity, r.method)):
        group = list(group)
        dofs = np.array([r.dof for r in group], dtype=float)
        medians = np.array([r.median_ns for r in group], dtype=float)
        distinct = len(set(dofs.tolist()))
        if distinct < CONFIG.benchmark.min_fit_points:
            raise InsufficientDataError(
                f"{quantity}/{method}: need at least {CONFIG.benchmark.min_fit_points} dof points, got {distinct}"
            )
        (slope, intercept), r2 = _polynomial_fit(dofs, medians, 1)
        quadratic_coefficient = quadratic_r2 = None
        if quantity in QUADRATIC_QUANTITIES:
            quadratic, quadratic_r2 = _polynomial_fit(dofs, medians, 2)
            quadratic_coefficient = float(quadratic[0])
        fits.append(ScalingFit(quantity, method, float(slope), float(intercept), r2,
                               quadratic_coefficient, quadratic_r2))
        logger.debug(f"{quantity}/{method}: slope {slope:.3g} ns/dof, R^2 {r2:.4f}")
    return fits


def write_scaling_svg(results: Iterable[BenchResult], path: Union[str, Path]) -> Path:
    """
    Line chart of median time (with the p10-p90 band) against dof, one line
    per (quantity, method), saved as SVG.
    """
    path = Path(path)
    if path.parent != Path(""):
        ensure_directory(path.parent)

    figure = Figure(figsize=(8, 5))
    axes = figure.add_subplot(1, 1, 1)
    ordered = sorted(results, key=_sort_key)
    for (quantity, method), group in groupby(ordered, key=lambda r: (r.quantity, r.method)):
        group = list(group)
        dofs = [r.dof for r in group]
        linestyle = "-" if method == "poe" else "--"
        (line,) = axes.plot(dofs, [r.median_ns / 1e3 for r in group], linestyle, marker="o",
                            markersize=3, label=f"{quantity} ({method})")
        axes.fill_between(dofs, [r.p10_ns / 1e3 for r in group], [r.p90_ns / 1e3 for r in group],
                          color=line.get_color(), alpha=0.2, linewidth=0)
    axes.set_xlabel("degrees of freedom")
    axes.set_ylabel("median time (µs)")
    axes.set_yscale("log")
    axes.grid(True, which="both", alpha=0.3)
    if axes.lines:
        axes.legend(fontsize="small")
    figure.tight_layout()
    figure.savefig(path, format="svg")
    logger.info(f"Wrote scaling chart: {path}")
    return path
