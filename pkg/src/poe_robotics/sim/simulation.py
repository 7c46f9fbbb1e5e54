"""
Fixed-step forward-dynamics simulation.

Each step runs trajectory generation and the control law through the
``controller(t, q, qdot) -> tau`` callable, then integrates
qdd = forward_dynamics(q, qdot, tau) with classic RK4 or semi-implicit
Euler. Stepping is deterministic and as fast as possible; there is no
real-time pacing.
"""

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Callable, Optional, TextIO, Tuple, Union

import numpy as np

from poe_robotics.config import CONFIG
from poe_robotics.dynamics import forward_dynamics, kinetic_energy, potential_energy
from poe_robotics.errors import SimulationDivergedError
from poe_robotics.kinematics_poe import forward_kinematics
from poe_robotics.logging_utils.logging_config import get_logger
from poe_robotics.robot_model.model import RobotModel, as_joint_vector
from poe_robotics.se3_core.se3 import ArrayLike
from poe_robotics.utils.path_utils import open_output

logger = get_logger("poe_robotics.sim")

Controller = Callable[[float, np.ndarray, np.ndarray], np.ndarray]


class Integrator(str, Enum):
    RK4 = "rk4"
    SEMI_IMPLICIT_EULER = "semi-implicit-euler"


@dataclass(frozen=True)
class SimConfig:
    """
    Integration settings.

    Attributes:
        dt (float): Fixed step in seconds, > 0.
        duration (float): Simulated time in seconds, >= dt.
        integrator (Integrator): rk4 or semi-implicit-euler.
        record_stride (int): Record every k-th step (the final state is always recorded).
    """

    dt: float
    duration: float
    integrator: Integrator = Integrator.RK4
    record_stride: int = 1

    def __post_init__(self):
        try:
            integrator = Integrator(self.integrator)
        except ValueError:
            choices = ", ".join(i.value for i in Integrator)
            raise ValueError(f"unknown integrator {self.integrator!r}; expected one of: {choices}")
        object.__setattr__(self, "integrator", integrator)
        if not np.isfinite(self.dt) or self.dt <= 0:
            raise ValueError(f"dt must be positive (got {self.dt!r})")
        if not np.isfinite(self.duration) or self.duration < self.dt:
            raise ValueError(f"duration must be at least dt (got {self.duration!r} < {self.dt!r})")
        if isinstance(self.record_stride, bool) or int(self.record_stride) != self.record_stride or self.record_stride < 1:
            raise ValueError(f"record_stride must be a positive integer (got {self.record_stride!r})")

    @classmethod
    def defaults(cls) -> "SimConfig":
        """SimConfig built from CONFIG.simulation."""
        settings = CONFIG.simulation
        return cls(settings.dt, settings.duration, settings.integrator, settings.record_stride)

    @property
    def steps(self) -> int:
        return int(round(self.duration / self.dt))


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Recorded time series; row k of every array belongs to time ``t[k]``.

    ``tau`` is the control torque applied from that sample onward and
    ``ee_position``/``ee_rotation`` the end-effector pose in {S}.
    """

    t: np.ndarray
    q: np.ndarray
    qdot: np.ndarray
    tau: np.ndarray
    ee_position: np.ndarray
    ee_rotation: np.ndarray

    def __len__(self) -> int:
        return len(self.t)

    @property
    def dof(self) -> int:
        return self.q.shape[1]


def _accelerations(model: RobotModel, q: np.ndarray, qdot: np.ndarray, tau: np.ndarray, step: int) -> np.ndarray:
    if not (np.all(np.isfinite(q)) and np.all(np.isfinite(qdot)) and np.all(np.isfinite(tau))):
        raise SimulationDivergedError(step, f"non-finite state or torque during step {step}")
    return forward_dynamics(model, q, qdot, tau)


def _rk4_step(
    model: RobotModel,
    controller: Controller,
    step: int,
    t: float,
    q: np.ndarray,
    qdot: np.ndarray,
    tau: np.ndarray,
    dt: float,
) -> Tuple[np.ndarray, np.ndarray]:
    # The control law is re-evaluated at every stage
    half = 0.5 * dt
    k1_q, k1_v = qdot, _accelerations(model, q, qdot, tau, step)

    q2, v2 = q + half * k1_q, qdot + half * k1_v
    k2_q, k2_v = v2, _accelerations(model, q2, v2, controller(t + half, q2, v2), step)

    q3, v3 = q + half * k2_q, qdot + half * k2_v
    k3_q, k3_v = v3, _accelerations(model, q3, v3, controller(t + half, q3, v3), step)

    q4, v4 = q + dt * k3_q, qdot + dt * k3_v
    k4_q, k4_v = v4, _accelerations(model, q4, v4, controller(t + dt, q4, v4), step)

    q_next = q + dt / 6.0 * (k1_q + 2.0 * k2_q + 2.0 * k3_q + k4_q)
    qdot_next = qdot + dt / 6.0 * (k1_v + 2.0 * k2_v + 2.0 * k3_v + k4_v)
    return q_next, qdot_next


def _semi_implicit_euler_step(
    model: RobotModel,
    step: int,
    q: np.ndarray,
    qdot: np.ndarray,
    tau: np.ndarray,
    dt: float,
) -> Tuple[np.ndarray, np.ndarray]:
    qdot_next = qdot + dt * _accelerations(model, q, qdot, tau, step)
    return q + dt * qdot_next, qdot_next


def simulate(
    model: RobotModel,
    controller: Controller,
    q0: ArrayLike,
    qdot0: Optional[ArrayLike] = None,
    config: Optional[SimConfig] = None,
) -> Trajectory:
    """
    Integrate the closed-loop dynamics from (q0, qdot0).

    Args:
        model: The robot.
        controller: Control law (t, q, qdot) -> tau.
        q0: Initial joint positions.
        qdot0: Initial joint rates, default zero.
        config: Integration settings, default SimConfig.defaults().

    Returns:
        Trajectory: Samples at steps 0, stride, 2*stride, ... and the final step.

    Raises:
        SimulationDivergedError: If the state or the commanded torque becomes
                                 non-finite; carries the 1-based step index.
        SingularInertiaError: Propagated from the forward-dynamics solve.
    """
    config = config or SimConfig.defaults()
    q = as_joint_vector(model, q0, "q0").copy()
    qdot = np.zeros(model.dof) if qdot0 is None else as_joint_vector(model, qdot0, "qdot0").copy()
    steps = config.steps
    logger.info(
        f"Simulating '{model.name}' for {steps} steps of {config.dt:g} s ({config.integrator.value})"
    )

    samples = {"t": [], "q": [], "qdot": [], "tau": [], "ee_position": [], "ee_rotation": []}
    for k in range(steps + 1):
        t = k * config.dt
        tau = as_joint_vector(model, controller(t, q, qdot), "tau")

        if k % config.record_stride == 0 or k == steps:
            ee = forward_kinematics(model, q)
            samples["t"].append(t)
            samples["q"].append(q.copy())
            samples["qdot"].append(qdot.copy())
            samples["tau"].append(tau.copy())
            samples["ee_position"].append(ee.translation.copy())
            samples["ee_rotation"].append(ee.rotation.copy())
        if k == steps:
            break

        try:
            if config.integrator is Integrator.RK4:
                q, qdot = _rk4_step(model, controller, k + 1, t, q, qdot, tau, config.dt)
            else:
                q, qdot = _semi_implicit_euler_step(model, k + 1, q, qdot, tau, config.dt)
            if not (np.all(np.isfinite(q)) and np.all(np.isfinite(qdot))):
                raise SimulationDivergedError(k + 1, f"non-finite state at step {k + 1} (t = {t + config.dt:g} s)")
        except SimulationDivergedError as e:
            logger.error(f"Simulation of '{model.name}' diverged: {e}")
            raise

    logger.info(f"Simulation finished: {len(samples['t'])} samples recorded")
    return Trajectory(
        t=np.array(samples["t"]),
        q=np.array(samples["q"]).reshape(-1, model.dof),
        qdot=np.array(samples["qdot"]).reshape(-1, model.dof),
        tau=np.array(samples["tau"]).reshape(-1, model.dof),
        ee_position=np.array(samples["ee_position"]),
        ee_rotation=np.array(samples["ee_rotation"]),
    )


def total_energy(model: RobotModel, q: ArrayLike, qdot: ArrayLike) -> float:
    """Mechanical energy T + V."""
    return kinetic_energy(model, q, qdot) + potential_energy(model, q)


def trajectory_header(dof: int) -> str:
    """CSV header t,q1..qn,qd1..qdn,tau1..taun,ee_x,ee_y,ee_z."""
    columns = ["t"]
    columns += [f"q{i}" for i in range(1, dof + 1)]
    columns += [f"qd{i}" for i in range(1, dof + 1)]
    columns += [f"tau{i}" for i in range(1, dof + 1)]
    columns += ["ee_x", "ee_y", "ee_z"]
    return ",".join(columns)


def write_trajectory_csv(trajectory: Trajectory, target: Union[str, Path, TextIO]) -> None:
    """
    Write ``t,q1..qn,qd1..qdn,tau1..taun,ee_x,ee_y,ee_z`` rows.

    ``target`` is a path, ``"-"`` for standard output, or an open text stream.
    """
    data = np.column_stack([
        trajectory.t, trajectory.q, trajectory.qdot, trajectory.tau, trajectory.ee_position,
    ])
    header = trajectory_header(trajectory.dof)
    fmt = CONFIG.output.float_format
    if hasattr(target, "write"):
        np.savetxt(target, data, fmt=fmt, delimiter=",", header=header, comments="")
        return
    with open_output(target) as handle:
        np.savetxt(handle, data, fmt=fmt, delimiter=",", header=header, comments="")
    logger.info(f"Wrote {len(trajectory)} trajectory rows to {target}")
