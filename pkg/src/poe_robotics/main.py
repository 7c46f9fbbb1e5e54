#!/usr/bin/env python3
"""
poe_robotics - Main CLI Script

Command-line interface of the screw-theory robot modeling toolkit. It
evaluates kinematic and dynamic quantities of zoo robots or description
files, runs the DOF-scaling benchmark of the geometric and traditional
pipelines, and simulates the impedance-control demo.

The script supports:
- compute: forward kinematics, Jacobians, mass matrix, gravity and Coriolis terms
- benchmark: timing statistics as CSV, with optional scaling fits and SVG chart
- simulate impedance: circular-path impedance control with trajectory CSV export

Usage:
    python -m poe_robotics.main compute fk --robot snake --dof 2 --q "0.5,-0.5"
    python -m poe_robotics.main benchmark --quantity fk --methods poe,dh --dof 2:64:2 --out results.csv
    python -m poe_robotics.main simulate impedance --robot franka --duration 10 --out traj.csv

Exit codes: 0 success, 1 validation error, 2 runtime or numerical error.
All numeric output uses the CONFIG.output.float_format format.
"""

import argparse
import sys
from typing import List, Optional

import numpy as np

from poe_robotics.bench import (
    METHODS,
    QUANTITIES,
    emit_csv,
    emit_scaling_fit,
    parse_dof_range,
    run_benchmark,
    write_scaling_svg,
)
from poe_robotics.config import CONFIG
from poe_robotics.config.app_config_loader import load_app_config
from poe_robotics.dh_baseline import (
    DHModel,
    dh_coriolis_matrix,
    dh_forward_kinematics,
    dh_gravity_vector,
    dh_hybrid_jacobian,
    dh_mass_matrix,
    franka_to_dh,
    snake_to_dh,
)
from poe_robotics.dynamics import coriolis_matrix, gravity_vector, mass_matrix
from poe_robotics.errors import InsufficientDataError
from poe_robotics.kinematics_poe import body_jacobian, forward_kinematics, hybrid_jacobian, spatial_jacobian
from poe_robotics.logging_utils.logging_config import add_file_handler, get_logger, set_console_level
from poe_robotics.robot_model import RobotModel
from poe_robotics.robots import FRANKA_READY_POSE, load_zoo_robot
from poe_robotics.sim import (
    ElbowTask,
    SimConfig,
    circular_target,
    impedance_controller,
    simulate,
    write_trajectory_csv,
)
from poe_robotics.utils.path_utils import open_output

logger = get_logger("poe_robotics")

COMPUTE_QUANTITIES = ("fk", "jacobian", "mass", "gravity", "coriolis")

# Default starting angle of every joint for robots without a named pose
DEFAULT_JOINT_ANGLE = 0.3

# Options taking "v1,v2,..." whose first value may be negative
VECTOR_OPTIONS = ("--q", "--qdot", "--offset", "--circle", "--q0")


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser reporting usage errors as ValueError (exit code 1)."""

    def error(self, message: str):
        raise ValueError(f"{self.prog}: {message}")


def parse_vector(text: str, name: str, length: Optional[int] = None) -> np.ndarray:
    """Parse ``"v1,v2,..."`` into a float array, optionally of a fixed length."""
    try:
        values = np.array([float(part) for part in text.split(",")])
    except ValueError:
        raise ValueError(f"--{name} must be a comma-separated list of numbers (got {text!r})")
    if length is not None and values.size != length:
        raise ValueError(f"--{name} needs {length} values, got {values.size}")
    return values


def join_vector_options(argv: List[str]) -> List[str]:
    """
    Rewrite ``[option, value]`` pairs of VECTOR_OPTIONS into ``option=value``.

    argparse takes a token starting with ``-`` for a new option, so
    ``--q -1.5,0.3`` would otherwise be rejected.

    Example:
        >>> join_vector_options(["compute", "fk", "--q", "-1,2"])
        ['compute', 'fk', '--q=-1,2']
    """
    joined = []
    tokens = iter(argv)
    for token in tokens:
        if token in VECTOR_OPTIONS:
            value = next(tokens, None)
            joined.append(token if value is None else f"{token}={value}")
        else:
            joined.append(token)
    return joined


def write_matrix(matrix: np.ndarray, target: str) -> None:
    """
    Write ``matrix`` as comma-separated rows with CONFIG.output.float_format.

    Vectors are written as a single row.

    Args:
        matrix (np.ndarray): Array to write.
        target (str): Output path, or ``-`` for standard output.
    """
    rows = np.atleast_2d(matrix)
    with open_output(target) as handle:
        np.savetxt(handle, rows, fmt=CONFIG.output.float_format, delimiter=",")


def _dh_twin(args: argparse.Namespace, model: RobotModel) -> DHModel:
    if args.robot == "snake":
        return snake_to_dh(model.dof)
    if args.robot == "franka":
        return franka_to_dh()
    raise ValueError(f"--method dh is available for the snake and franka robots, not {args.robot!r}")


def run_compute(args: argparse.Namespace) -> int:
    """
    Evaluate one quantity of the ``compute`` subcommand and write it as CSV.

    Returns:
        int: 0 on success; validation problems raise ValueError.
    """
    model = load_zoo_robot(args.robot, args.dof)
    q = parse_vector(args.q, "q", model.dof)
    qdot = parse_vector(args.qdot, "qdot", model.dof) if args.qdot is not None else None
    offset = parse_vector(args.offset, "offset", 3) if args.offset is not None else None
    logger.info(f"Computing {args.quantity} of '{model.name}' with the {args.method} method")

    if args.quantity == "coriolis" and qdot is None:
        raise ValueError("coriolis requires --qdot")

    if args.method == "dh":
        if args.body_id is not None or offset is not None:
            raise ValueError("--body-id/--offset are only supported with --method poe")
        if args.quantity == "jacobian" and args.flavor != "hybrid":
            raise ValueError("--method dh computes the hybrid Jacobian only")
        dh = _dh_twin(args, model)
        results = {
            "fk": lambda: dh_forward_kinematics(dh, q).matrix(),
            "jacobian": lambda: dh_hybrid_jacobian(dh, q).matrix,
            "mass": lambda: dh_mass_matrix(dh, q),
            "gravity": lambda: dh_gravity_vector(dh, q),
            "coriolis": lambda: dh_coriolis_matrix(dh, q, qdot),
        }
    else:
        jacobians = {
            "spatial": lambda: spatial_jacobian(model, q).matrix,
            "body": lambda: body_jacobian(model, q, args.body_id).matrix,
            "hybrid": lambda: hybrid_jacobian(model, q, args.body_id, offset).matrix,
        }
        results = {
            "fk": lambda: forward_kinematics(model, q, args.body_id, offset).matrix(),
            "jacobian": jacobians[args.flavor],
            "mass": lambda: mass_matrix(model, q),
            "gravity": lambda: gravity_vector(model, q),
            "coriolis": lambda: coriolis_matrix(model, q, qdot),
        }

    write_matrix(results[args.quantity](), args.out)
    return 0


def run_benchmark_command(args: argparse.Namespace, pin_cpu: bool) -> int:
    """
    Run every requested (quantity, method) pair, write the CSV, log the
    scaling fits and optionally save the SVG chart.

    Too few dof points for a fit is a warning, not an error.
    """
    quantities = [part.strip() for part in args.quantity.split(",") if part.strip()]
    methods = [part.strip() for part in args.methods.split(",") if part.strip()]
    for quantity in quantities:
        if quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {quantity!r}; expected one of {QUANTITIES}")
    for method in methods:
        if method not in METHODS:
            raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    dof_list = parse_dof_range(args.dof)

    results = []
    for quantity in quantities:
        for method in methods:
            results.extend(run_benchmark(quantity, method, dof_list, args.reps, args.warmup, pin_cpu=pin_cpu))

    with open_output(args.out) as handle:
        handle.write(emit_csv(results))
    logger.info(f"Wrote {len(results)} benchmark results to {args.out}")

    try:
        for fit in emit_scaling_fit(results):
            message = f"{fit.quantity} ({fit.method}): {fit.slope:.4g} ns/dof, R^2 = {fit.r2:.4f}"
            if fit.quadratic_r2 is not None:
                message += f"; quadratic: {fit.quadratic_coefficient:.4g} ns/dof^2, R^2 = {fit.quadratic_r2:.4f}"
            logger.info(message)
    except InsufficientDataError as e:
        logger.warning(f"Skipping scaling fit: {e}")

    if args.svg:
        write_scaling_svg(results, args.svg)
    return 0


def run_simulate(args: argparse.Namespace) -> int:
    """Simulate circular-path impedance control and write the trajectory CSV."""
    model = load_zoo_robot(args.robot, args.dof)
    if args.q0 is not None:
        q0 = parse_vector(args.q0, "q0", model.dof)
    elif args.robot == "franka":
        q0 = np.array(FRANKA_READY_POSE)
    else:
        q0 = np.full(model.dof, DEFAULT_JOINT_ANGLE)

    x0 = forward_kinematics(model, q0).translation
    if args.circle is not None:
        cx, cy, cz, radius, period = parse_vector(args.circle, "circle", 5)
        center = np.array([cx, cy, cz])
    else:
        # Circle through the start position in the x-y plane
        radius, period = CONFIG.simulation.circle_radius, CONFIG.simulation.circle_period
        center = x0 - radius * np.array([1.0, 0.0, 0.0])

    elbow = None
    if args.elbow_body is not None:
        elbow = ElbowTask.hold_initial(model, q0, args.elbow_body, args.stiffness, args.damping)

    config = SimConfig(args.dt, args.duration, args.integrator, args.record_stride)
    controller = impedance_controller(model, center, radius, period, args.stiffness, args.damping, elbow)
    trajectory = simulate(model, controller, q0, None, config)

    final_target = circular_target(center, radius, period, trajectory.t[-1])
    error = np.linalg.norm(trajectory.ee_position[-1] - final_target)
    logger.info(f"Final end-effector tracking error: {error:.3g} m")
    write_trajectory_csv(trajectory, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    """Parser with the compute, benchmark and simulate subcommands."""
    common = CliArgumentParser(add_help=False)
    common.add_argument('--debug', action='store_true', help='Enable debug logging and tracebacks')

    parser = CliArgumentParser(
        prog="poe_robotics",
        description="Screw-theory kinematics, dynamics, benchmarks and simulation of open-chain robots",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    python -m poe_robotics.main compute fk --robot snake --dof 2 --q "1.5708,-1.5708"
    python -m poe_robotics.main compute jacobian --robot franka --q "0,0,0,0,0,0,0" --flavor body
    python -m poe_robotics.main benchmark --quantity fk,mass --methods poe,dh --dof 2:32:2 --reps 50 --out -
    python -m poe_robotics.main simulate impedance --robot snake --dof 3 --duration 5 --out traj.csv
        """,
    )
    subcommands = parser.add_subparsers(dest="command", required=True)

    compute = subcommands.add_parser("compute", parents=[common], help="Evaluate one quantity at one state")
    compute.add_argument("quantity", choices=COMPUTE_QUANTITIES)
    compute.add_argument("--robot", required=True, help="snake, cartpole, franka or a description file")
    compute.add_argument("--dof", type=int, help="Number of snake links (must match for other robots)")
    compute.add_argument("--q", required=True, help='Joint positions "v1,v2,..."')
    compute.add_argument("--qdot", help='Joint rates "v1,v2,..." (required for coriolis)')
    compute.add_argument("--body-id", type=int, help="1-based body for fk/jacobian, default the last")
    compute.add_argument("--offset", help='Point offset "x,y,z" in the body frame')
    compute.add_argument("--method", choices=METHODS, default="poe")
    compute.add_argument("--flavor", choices=("spatial", "body", "hybrid"), default="hybrid",
                         help="Jacobian flavor (default hybrid)")
    compute.add_argument("--out", default="-", help="Output path, - for stdout")

    bench = subcommands.add_parser("benchmark", parents=[common], help="Time quantities against robot size")
    bench.add_argument("--quantity", default="fk", help=f"Comma-separated subset of {','.join(QUANTITIES)}")
    bench.add_argument("--methods", default="poe,dh", help="Comma-separated subset of poe,dh")
    bench.add_argument("--dof", default=CONFIG.benchmark.dof_range, help="start:stop:step or a list")
    bench.add_argument("--reps", type=int, default=CONFIG.benchmark.reps)
    bench.add_argument("--warmup", type=int, default=CONFIG.benchmark.warmup)
    bench.add_argument("--out", default="-", help="CSV output path, - for stdout")
    bench.add_argument("--svg", help="Optional SVG chart path")

    sim = subcommands.add_parser("simulate", parents=[common], help="Run a closed-loop simulation")
    sim.add_argument("controller", choices=("impedance",))
    sim.add_argument("--robot", required=True, help="snake, cartpole, franka or a description file")
    sim.add_argument("--dof", type=int)
    sim.add_argument("--duration", type=float, default=CONFIG.simulation.duration)
    sim.add_argument("--dt", type=float, default=CONFIG.simulation.dt)
    sim.add_argument("--integrator", choices=("rk4", "semi-implicit-euler"), default=CONFIG.simulation.integrator)
    sim.add_argument("--record-stride", type=int, default=CONFIG.simulation.record_stride)
    sim.add_argument("--stiffness", type=float, default=CONFIG.simulation.stiffness, help="N/m")
    sim.add_argument("--damping", type=float, default=CONFIG.simulation.damping, help="N s/m")
    sim.add_argument("--circle", help='"cx,cy,cz,r,period"; default a circle through the start position')
    sim.add_argument("--q0", help='Initial joint positions "v1,v2,..."')
    sim.add_argument("--elbow-body", type=int, help="Hold this body's COM at its initial position")
    sim.add_argument("--out", default="-", help="Trajectory CSV path, - for stdout")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point of the poe_robotics CLI.

    Args:
        argv (Optional[List[str]]): Arguments without the program name,
                                    default sys.argv[1:].

    Returns:
        int: Exit code (0 success, 1 validation error, 2 runtime/numerical error)
    """
    debug = False
    try:
        argv = sys.argv[1:] if argv is None else list(argv)
        args = build_parser().parse_args(join_vector_options(argv))
        debug = args.debug
        if debug:
            set_console_level(logger, 'DEBUG')
            logger.debug("Debug logging enabled")

        pin_cpu = False
        try:
            app_config = load_app_config()
            pin_cpu = bool(app_config.pin_benchmark_cpu)
            if app_config.log_dir:
                log_file = add_file_handler(logger, app_config.log_dir)
                logger.debug(f"Logging to {log_file}")
        except FileNotFoundError as e:
            logger.warning(f"{e}; continuing with defaults")

        if args.command == "compute":
            return run_compute(args)
        if args.command == "benchmark":
            return run_benchmark_command(args, pin_cpu)
        return run_simulate(args)

    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return 2
    except (RuntimeError, FloatingPointError, np.linalg.LinAlgError) as e:
        logger.error(f"Runtime error: {e}", exc_info=debug)
        return 2
    except (ValueError, OSError, ImportError) as e:
        logger.error(f"Error: {e}", exc_info=debug)
        return 1


if __name__ == '__main__':
    sys.exit(main())
