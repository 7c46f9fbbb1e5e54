"""
Traditional modified Denavit-Hartenberg pipeline.

An independent implementation of forward kinematics, the hybrid Jacobian
and the dynamic terms built on link frames {1}..{n} placed by the modified
DH convention. It serves as the correctness oracle for the geometric
pipeline and as its benchmark counterpart.

Link transform: H = Rot_x(alpha) Trans_x(a) Rot_z(theta) Trans_z(d), with
theta = theta_offset + q for revolute joints and d = d + q for prismatic ones.
"""

import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from poe_robotics.config import CONFIG
from poe_robotics.dynamics.dynamics import christoffel_coriolis
from poe_robotics.errors import DimensionError
from poe_robotics.kinematics_poe.kinematics import JacobianFlavor, JacobianMatrix
from poe_robotics.robot_model.model import BodySpec, JointKind, RobotModel
from poe_robotics.se3_core import Transform, as_vector3, compose, inverse
from poe_robotics.se3_core.se3 import ArrayLike

LINEAR_JACOBIAN_MODES = ("finite_difference", "cross_product")


@dataclass(frozen=True)
class DHRow:
    """Modified-DH parameters of one link (meters and radians)."""

    a: float
    alpha: float
    d: float
    theta_offset: float = 0.0
    kind: JointKind = JointKind.REVOLUTE

    def __post_init__(self):
        object.__setattr__(self, "kind", JointKind(self.kind))
        for name in ("a", "alpha", "d", "theta_offset"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"DH parameter {name} must be finite (got {value!r})")
            object.__setattr__(self, name, value)


@dataclass(frozen=True, eq=False)
class DHModel:
    """
    Rows covering {S}->{1} through {n-1}->{n}, the tool transform {n}->{ee},
    and per-body inertial data whose ``com_home`` is the COM frame expressed
    in link frame {i}.
    """

    name: str
    rows: Tuple[DHRow, ...]
    tool: Transform
    bodies: Tuple[BodySpec, ...]
    gravity: np.ndarray = field(default_factory=lambda: np.array([0.0, 0.0, -9.81]))

    def __post_init__(self):
        rows = tuple(self.rows)
        bodies = tuple(self.bodies)
        if len(rows) != len(bodies):
            raise DimensionError(f"DH model '{self.name}' has {len(rows)} rows but {len(bodies)} bodies")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "bodies", bodies)
        object.__setattr__(self, "gravity", np.array(as_vector3(self.gravity, "gravity")))

    @property
    def dof(self) -> int:
        return len(self.rows)


def _rot_x(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def _rot_z(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def dh_transform(row: DHRow, q: float) -> Transform:
    """Link transform Rot_x(alpha) Trans_x(a) Rot_z(theta) Trans_z(d)."""
    theta = row.theta_offset + (q if row.kind is JointKind.REVOLUTE else 0.0)
    d = row.d + (q if row.kind is JointKind.PRISMATIC else 0.0)
    rot_x = _rot_x(row.alpha)
    rotation = rot_x @ _rot_z(theta)
    translation = np.array([row.a, 0.0, 0.0]) + rot_x @ np.array([0.0, 0.0, d])
    return Transform(rotation, translation)


def _joint_vector(dh: DHModel, q: ArrayLike, name: str = "q") -> np.ndarray:
    array = np.atleast_1d(np.asarray(q, dtype=float))
    if array.shape != (dh.dof,):
        raise DimensionError(f"{name} must have length {dh.dof}, got shape {np.shape(q)}")
    return array


def dh_frames(dh: DHModel, q: ArrayLike) -> List[Transform]:
    """Link frames [{S}, {1}, ..., {n}] in {S}, concatenated left to right."""
    q = _joint_vector(dh, q)
    frames = [Transform.identity()]
    for row, qi in zip(dh.rows, q):
        frames.append(compose(frames[-1], dh_transform(row, qi)))
    return frames


def dh_forward_kinematics(dh: DHModel, q: ArrayLike) -> Transform:
    """
    End-effector pose {S}H_1(q_1) ... {n-1}H_n(q_n) {n}H_ee.

    Args:
        dh (DHModel): The DH robot.
        q (ArrayLike): Joint vector of length dof.

    Returns:
        Transform: Pose of the end-effector frame in {S}.

    Example:
        >>> dh_forward_kinematics(snake_to_dh(2), [0.0, 0.0]).translation
        array([2., 0., 0.])
    """
    return compose(dh_frames(dh, q)[-1], dh.tool)


def _point_jacobian(
    dh: DHModel,
    q: np.ndarray,
    frames: Sequence[Transform],
    body_id: int,
    local_point: np.ndarray,
    linear: str,
) -> np.ndarray:
    """6 x n hybrid Jacobian of a point fixed in link frame {body_id}; later columns zero."""
    n = dh.dof
    J = np.zeros((6, n))
    point = frames[body_id].apply(local_point)
    for k in range(body_id):
        z_k = frames[k + 1].rotation[:, 2]
        if dh.rows[k].kind is JointKind.REVOLUTE:
            J[3:, k] = z_k
            if linear == "cross_product":
                J[:3, k] = np.cross(z_k, point - frames[k + 1].translation)
        elif linear == "cross_product":
            J[:3, k] = z_k

    if linear == "finite_difference":
        h = CONFIG.dh.jacobian_fd_step
        for k in range(body_id):
            forward = q.copy()
            backward = q.copy()
            forward[k] += h
            backward[k] -= h
            p_plus = dh_frames(dh, forward)[body_id].apply(local_point)
            p_minus = dh_frames(dh, backward)[body_id].apply(local_point)
            J[:3, k] = (p_plus - p_minus) / (2.0 * h)
    elif linear != "cross_product":
        raise ValueError(f"unknown linear Jacobian mode {linear!r}; expected one of {LINEAR_JACOBIAN_MODES}")
    return J


def dh_hybrid_jacobian(dh: DHModel, q: ArrayLike, linear: str = "finite_difference") -> JacobianMatrix:
    """
    End-effector hybrid Jacobian of the traditional method.

    The linear block collects the partial derivatives of the end-effector
    position (central differences with step CONFIG.dh.jacobian_fd_step, or
    the exact z_k x (p - o_k) columns with ``linear="cross_product"``); the
    angular block stacks the revolute joint axes z_k in {S} and zero columns
    for prismatic joints.

    Args:
        dh (DHModel): The DH robot.
        q (ArrayLike): Joint vector of length dof.
        linear (str): "finite_difference" (default) or "cross_product".

    Returns:
        JacobianMatrix: 6 x n hybrid Jacobian of the end-effector point.

    Raises:
        DimensionError: If q has the wrong length.
        ValueError: On an unknown ``linear`` mode.
    """
    q = _joint_vector(dh, q)
    frames = dh_frames(dh, q)
    J = _point_jacobian(dh, q, frames, dh.dof, dh.tool.translation, linear)
    return JacobianMatrix(J, JacobianFlavor.HYBRID, dh.dof, np.zeros(3))


def _com_jacobians(dh: DHModel, q: np.ndarray):
    frames = dh_frames(dh, q)
    for i, body in enumerate(dh.bodies):
        com = compose(frames[i + 1], body.com_home)
        J = _point_jacobian(dh, q, frames, i + 1, body.com_home.translation, "cross_product")
        yield body, com, J


def dh_mass_matrix(dh: DHModel, q: ArrayLike) -> np.ndarray:
    """
    M(q) = sum_i m_i J_v,i^T J_v,i + J_w,i^T (R_i I_i R_i^T) J_w,i.

    The inertia of each body is rotated into {S} with the current COM frame
    orientation. The result is exactly symmetric.

    Args:
        dh (DHModel): The DH robot.
        q (ArrayLike): Joint vector of length dof.

    Returns:
        np.ndarray: n x n symmetric mass matrix, equal to the geometric one
                    for the same robot.

    Note:
        Each m_i stays inside the sum; the COM Jacobians use the exact
        cross-product columns, never finite differences.
    """
    q = _joint_vector(dh, q)
    M = np.zeros((dh.dof, dh.dof))
    for body, com, J in _com_jacobians(dh, q):
        inertia_s = com.rotation @ body.inertia @ com.rotation.T
        M += body.mass * J[:3].T @ J[:3] + J[3:].T @ inertia_s @ J[3:]
    return 0.5 * (M + M.T)


def dh_gravity_vector(dh: DHModel, q: ArrayLike) -> np.ndarray:
    """G(q) = sum_i J_v,i^T (-m_i g) with COM Jacobians from the link frames."""
    q = _joint_vector(dh, q)
    G = np.zeros(dh.dof)
    for body, _, J in _com_jacobians(dh, q):
        G += J[:3].T @ (-body.mass * dh.gravity)
    return G


def dh_potential_energy(dh: DHModel, q: ArrayLike) -> float:
    """V(q) = sum_i -m_i g . p_i with the COM positions taken from the link frames."""
    q = _joint_vector(dh, q)
    frames = dh_frames(dh, q)
    return float(sum(
        -body.mass * dh.gravity @ frames[i + 1].apply(body.com_home.translation)
        for i, body in enumerate(dh.bodies)
    ))


def dh_coriolis_matrix(dh: DHModel, q: ArrayLike, qdot: ArrayLike) -> np.ndarray:
    """Christoffel Coriolis matrix from central differences of :func:`dh_mass_matrix`."""
    q = _joint_vector(dh, q)
    qdot = _joint_vector(dh, qdot, "qdot")
    n = dh.dof
    dM = np.zeros((n, n, n))
    for k in range(n):
        h = CONFIG.dynamics.fd_relative_step * max(1.0, abs(q[k]))
        forward = q.copy()
        backward = q.copy()
        forward[k] += h
        backward[k] -= h
        dM[:, :, k] = (dh_mass_matrix(dh, forward) - dh_mass_matrix(dh, backward)) / (2.0 * h)
    return christoffel_coriolis(dM, qdot)


def _rod_inertia(mass: float, length: float) -> np.ndarray:
    # Slender rod along x: no axial moment
    transverse = mass * length ** 2 / 12.0
    return np.diag([0.0, transverse, transverse])


def snake_to_dh(n: int, l: float = 1.0, m_each: float = 1.0) -> DHModel:
    """
    Modified-DH description of the planar snake of ``n`` uniform bars.

    Row 1 has a = 0, rows 2..n have a = l; all alpha = d = 0 and revolute.
    The tool is Trans(l, 0, 0) and each COM sits at (l/2, 0, 0) in its link frame.
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"snake needs at least one link (got n = {n!r})")
    if l <= 0 or m_each <= 0:
        raise ValueError(f"snake link length and mass must be positive (got l = {l!r}, m = {m_each!r})")
    n = int(n)
    rows = [DHRow(a=0.0 if i == 0 else l, alpha=0.0, d=0.0) for i in range(n)]
    bodies = [
        BodySpec(m_each, Transform.from_translation([l / 2.0, 0.0, 0.0]), _rod_inertia(m_each, l))
        for _ in range(n)
    ]
    return DHModel(
        name=f"snake{n}_dh",
        rows=tuple(rows),
        tool=Transform.from_translation([l, 0.0, 0.0]),
        bodies=tuple(bodies),
        gravity=np.array([0.0, -9.81, 0.0]),
    )


def dh_from_geometry(name: str, rows: Sequence[DHRow], tool: Transform, model: RobotModel) -> DHModel:
    """
    DH model whose inertial data are taken from a geometric model.

    Each body's home COM frame is re-expressed in its link frame at q = 0.
    """
    rows = tuple(rows)
    if len(rows) != model.dof:
        raise DimensionError(f"{len(rows)} DH rows for a {model.dof}-DOF model")
    home_frames = [Transform.identity()]
    for row in rows:
        home_frames.append(compose(home_frames[-1], dh_transform(row, 0.0)))
    bodies = [
        BodySpec(body.mass, compose(inverse(home_frames[i + 1]), body.com_home), body.inertia)
        for i, body in enumerate(model.bodies)
    ]
    return DHModel(name=name, rows=rows, tool=tool, bodies=tuple(bodies), gravity=model.gravity)
