"""
Cartesian impedance control with gravity compensation.

tau = J_v^T (K (x_target - x) - B xdot) + G(q), with J_v the linear block of
the hybrid Jacobian at the end-effector. An optional second positional task
holds a point on an intermediate body, e.g. the elbow, at its own target.
Orientation is not controlled.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from poe_robotics.dynamics import gravity_vector
from poe_robotics.errors import DimensionError
from poe_robotics.kinematics_poe import KinematicState, forward_kinematics, hybrid_jacobian, update_kinematics
from poe_robotics.robot_model.model import RobotModel, as_joint_vector
from poe_robotics.se3_core import as_vector3
from poe_robotics.se3_core.se3 import ArrayLike
from poe_robotics.sim.simulation import Controller

Gain = Union[float, ArrayLike]

PLANE_TOLERANCE = 1e-9


def as_gain(value: Gain, name: str = "gain") -> np.ndarray:
    """
    3 x 3 gain matrix from a scalar (times identity) or a 3 x 3 array.

    Raises:
        DimensionError: If the array is not 3 x 3.
        ValueError: If the matrix is not symmetric positive semidefinite.
    """
    array = np.asarray(value, dtype=float)
    if array.ndim == 0:
        array = float(array) * np.eye(3)
    if array.shape != (3, 3):
        raise DimensionError(f"{name} must be a scalar or 3x3, got shape {array.shape}")
    if np.max(np.abs(array - array.T)) > PLANE_TOLERANCE:
        raise ValueError(f"{name} must be symmetric")
    if np.linalg.eigvalsh(array)[0] < -PLANE_TOLERANCE:
        raise ValueError(f"{name} must be positive semidefinite")
    return array


@dataclass(frozen=True, eq=False)
class ElbowTask:
    """
    Secondary positional impedance task on a point of an intermediate body.

    Attributes:
        body_id: 1-based body carrying the point.
        offset: Point offset in the body's home COM frame.
        target: Target position in {S}.
        stiffness: 3 x 3 stiffness (N/m), or a scalar times identity.
        damping: 3 x 3 damping (N s/m), or a scalar times identity.
    """

    body_id: int
    offset: np.ndarray
    target: np.ndarray
    stiffness: np.ndarray
    damping: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "offset", np.array(as_vector3(self.offset, "offset")))
        object.__setattr__(self, "target", np.array(as_vector3(self.target, "target")))
        object.__setattr__(self, "stiffness", as_gain(self.stiffness, "elbow stiffness"))
        object.__setattr__(self, "damping", as_gain(self.damping, "elbow damping"))

    @classmethod
    def hold_initial(
        cls,
        model: RobotModel,
        q0: ArrayLike,
        body_id: int,
        stiffness: Gain,
        damping: Gain,
        offset: Optional[ArrayLike] = None,
    ) -> "ElbowTask":
        """Task holding the point at the position it has in configuration ``q0``."""
        offset = np.zeros(3) if offset is None else offset
        target = forward_kinematics(model, q0, body_id, offset).translation
        return cls(body_id, offset, target, stiffness, damping)


def _point_force(
    model: RobotModel,
    state: KinematicState,
    qdot: np.ndarray,
    body_id: Optional[int],
    offset: Optional[np.ndarray],
    target: np.ndarray,
    K: np.ndarray,
    B: np.ndarray,
) -> np.ndarray:
    position = forward_kinematics(model, state, body_id, offset).translation
    Jv = hybrid_jacobian(model, state, body_id, offset).linear
    velocity = Jv @ qdot
    return Jv.T @ (K @ (target - position) - B @ velocity)


def impedance_torque(
    model: RobotModel,
    q: ArrayLike,
    qdot: ArrayLike,
    x_target: ArrayLike,
    K: Gain,
    B: Gain,
    elbow: Optional[ElbowTask] = None,
) -> np.ndarray:
    """
    Joint torques of the gravity-compensated Cartesian impedance law.

    Args:
        model: The robot.
        q: Joint positions.
        qdot: Joint rates.
        x_target: End-effector target position in {S}.
        K: Stiffness, 3 x 3 symmetric PSD (N/m) or a scalar.
        B: Damping, 3 x 3 symmetric PSD (N s/m) or a scalar.
        elbow: Optional secondary task.

    Returns:
        np.ndarray: n-vector of joint torques.

    Raises:
        DimensionError: On a wrong-length q/qdot/target or non-3x3 gain.
    """
    q = as_joint_vector(model, q, "q")
    qdot = as_joint_vector(model, qdot, "qdot")
    x_target = as_vector3(x_target, "x_target")
    state = update_kinematics(model, q)
    tau = _point_force(model, state, qdot, None, None, x_target, as_gain(K, "stiffness"), as_gain(B, "damping"))
    if elbow is not None:
        tau = tau + _point_force(
            model, state, qdot, elbow.body_id, elbow.offset, elbow.target, elbow.stiffness, elbow.damping
        )
    return tau + gravity_vector(model, state)


def plane_basis(u: ArrayLike, v: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    """Check that (u, v) is an orthonormal pair and return it as arrays."""
    u = np.array(as_vector3(u, "u"))
    v = np.array(as_vector3(v, "v"))
    gram = np.array([[u @ u, u @ v], [v @ u, v @ v]])
    if np.max(np.abs(gram - np.eye(2))) > PLANE_TOLERANCE:
        raise ValueError("circle plane basis (u, v) must be orthonormal")
    return u, v


def circular_target(
    center: ArrayLike,
    radius: float,
    period: float,
    t: float,
    u: ArrayLike = (1.0, 0.0, 0.0),
    v: ArrayLike = (0.0, 1.0, 0.0),
) -> np.ndarray:
    """center + radius (cos(2 pi t / period) u + sin(2 pi t / period) v)."""
    if not period > 0:
        raise ValueError(f"period must be positive (got {period!r})")
    if radius < 0:
        raise ValueError(f"radius must be non-negative (got {radius!r})")
    u, v = plane_basis(u, v)
    phase = 2.0 * math.pi * t / period
    return as_vector3(center, "center") + radius * (math.cos(phase) * u + math.sin(phase) * v)


def impedance_controller(
    model: RobotModel,
    center: ArrayLike,
    radius: float,
    period: float,
    K: Gain,
    B: Gain,
    elbow: Optional[ElbowTask] = None,
    u: ArrayLike = (1.0, 0.0, 0.0),
    v: ArrayLike = (0.0, 1.0, 0.0),
) -> Controller:
    """
    Control law following a circle with the end-effector.

    Returns the ``(t, q, qdot) -> tau`` callable expected by ``simulate``;
    ``radius = 0`` gives a static target at ``center``.
    """
    center = np.array(as_vector3(center, "center"))
    u, v = plane_basis(u, v)
    stiffness = as_gain(K, "stiffness")
    damping = as_gain(B, "damping")
    circular_target(center, radius, period, 0.0, u, v)

    def controller(t: float, q: np.ndarray, qdot: np.ndarray) -> np.ndarray:
        target = circular_target(center, radius, period, t, u, v)
        return impedance_torque(model, q, qdot, target, stiffness, damping, elbow)

    return controller
