"""
Product-of-exponentials kinematics.

Forward kinematics and the spatial, body and hybrid Jacobians of any body,
or any point on a body, of a RobotModel. One left-to-right pass computes
the partial products P_k = exp([eta_1] q_1) ... exp([eta_k] q_k); forward
kinematics and every Jacobian column reuse them, so a query costs O(n)
transform products.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from poe_robotics.errors import BodyIndexError, DimensionError
from poe_robotics.robot_model.model import RobotModel, as_joint_vector
from poe_robotics.se3_core import (
    Transform,
    adjoint,
    as_vector3,
    compose,
    exp_twist,
    inverse_adjoint,
    skew,
)
from poe_robotics.se3_core.se3 import ArrayLike


class JacobianFlavor(str, Enum):
    SPATIAL = "spatial"
    BODY = "body"
    HYBRID = "hybrid"


@dataclass(frozen=True, eq=False)
class JacobianMatrix:
    """
    6 x n Jacobian with (linear; angular) rows.

    Attributes:
        matrix: The 6 x n array.
        flavor: spatial, body or hybrid.
        body_id: 1-based body the Jacobian refers to.
        offset: Point offset used for hybrid Jacobians (zeros otherwise).
    """

    matrix: np.ndarray
    flavor: JacobianFlavor
    body_id: int
    offset: np.ndarray

    @property
    def linear(self) -> np.ndarray:
        return self.matrix[:3]

    @property
    def angular(self) -> np.ndarray:
        return self.matrix[3:]

    @property
    def dof(self) -> int:
        return self.matrix.shape[1]


@dataclass(frozen=True, eq=False)
class SpatialVelocity:
    """Linear velocity of a material point and angular velocity, both in {S}."""

    linear: np.ndarray
    angular: np.ndarray


@dataclass(frozen=True, eq=False)
class KinematicState:
    """
    Kinematic snapshot of one configuration.

    ``partial_products[k]`` is exp([eta_1] q_1) ... exp([eta_k] q_k) with
    ``partial_products[0]`` the identity; ``spatial`` is the 6 x n spatial
    Jacobian. Build it with :func:`update_kinematics` and pass it to the
    query functions to share the work between several queries.
    """

    model: RobotModel
    q: np.ndarray
    partial_products: Tuple[Transform, ...]
    spatial: np.ndarray


def update_kinematics(model: RobotModel, q: ArrayLike) -> KinematicState:
    """Compute the partial products and spatial Jacobian for ``q``."""
    q = as_joint_vector(model, q, "q")
    products = [Transform.identity()]
    spatial = np.empty((6, model.dof))
    for i, (eta, qi) in enumerate(zip(model.joint_twists, q)):
        # Column i uses the product up to joint i-1
        spatial[:, i] = adjoint(products[-1]) @ eta.vector()
        products.append(compose(products[-1], exp_twist(eta, qi)))
    return KinematicState(model, q, tuple(products), spatial)


def _state(model: RobotModel, q) -> KinematicState:
    if isinstance(q, KinematicState):
        if q.model is not model:
            raise ValueError("kinematic state was computed for a different model")
        return q
    return update_kinematics(model, q)


def _check_body(model: RobotModel, body_id: int) -> int:
    if isinstance(body_id, bool) or int(body_id) != body_id or not 1 <= body_id <= model.dof:
        raise BodyIndexError(f"body_id must be in 1..{model.dof}, got {body_id!r}")
    return int(body_id)


def point_home_pose(model: RobotModel, body_id: Optional[int] = None, offset: Optional[ArrayLike] = None) -> Transform:
    """
    Home pose of the queried point.

    The end-effector home pose when the last body is queried without an
    offset; otherwise the body's home COM frame translated by ``offset``,
    which is expressed in that frame.
    """
    if body_id is None:
        body_id = model.dof
    body_id = _check_body(model, body_id)
    offset_vector = np.zeros(3) if offset is None else as_vector3(offset, "offset")
    if body_id == model.dof and not np.any(offset_vector):
        return model.ee_home
    return compose(model.com_home_list[body_id - 1], Transform.from_translation(offset_vector))


def forward_kinematics(
    model: RobotModel,
    q,
    body_id: Optional[int] = None,
    offset: Optional[ArrayLike] = None,
) -> Transform:
    """
    Pose of a point on a body: exp([eta_1] q_1) ... exp([eta_b] q_b) H_home.

    Args:
        model: The robot.
        q: Joint vector of length dof, or a KinematicState.
        body_id: 1-based body index, default the last body.
        offset: Point offset in the body's home frame, default zero.

    Raises:
        BodyIndexError: If body_id lies outside 1..dof.
        DimensionError: If q has the wrong length.
    """
    home = point_home_pose(model, body_id, offset)
    state = _state(model, q)
    b = _check_body(model, model.dof if body_id is None else body_id)
    return compose(state.partial_products[b], home)


def spatial_jacobian(model: RobotModel, q) -> JacobianMatrix:
    """
    Spatial Jacobian; column i is Ad(P_{i-1}) eta_i.

    At q = 0 the columns equal the home joint twists.
    """
    state = _state(model, q)
    return JacobianMatrix(state.spatial.copy(), JacobianFlavor.SPATIAL, model.dof, np.zeros(3))


def body_jacobian(model: RobotModel, q, body_id: Optional[int] = None) -> JacobianMatrix:
    """
    Body Jacobian of body ``body_id`` in its COM frame {C_b}.

    Column i (i <= b) is Ad(iH_b * H_B0)^-1 eta_i with
    iH_b = exp([eta_{i+1}] q_{i+1}) ... exp([eta_b] q_b); since Ad(P_i) eta_i
    equals Ad(P_{i-1}) eta_i this is Ad(H_SB)^-1 times the spatial column,
    H_SB = P_b H_B0. Columns beyond b are exactly zero.
    """
    if body_id is None:
        body_id = model.dof
    body_id = _check_body(model, body_id)
    state = _state(model, q)
    H_SB = compose(state.partial_products[body_id], model.com_home_list[body_id - 1])
    matrix = np.zeros((6, model.dof))
    matrix[:, :body_id] = inverse_adjoint(H_SB) @ state.spatial[:, :body_id]
    return JacobianMatrix(matrix, JacobianFlavor.BODY, body_id, np.zeros(3))


def hybrid_from_spatial(spatial: np.ndarray, point: np.ndarray, body_id: int) -> np.ndarray:
    """
    [[I, -[p]], [0, I]] applied to the first ``body_id`` spatial columns.

    The top rows give the velocity of the point p, the bottom rows the
    angular velocity, both in {S}. Remaining columns are exactly zero.
    """
    matrix = np.zeros_like(spatial)
    columns = spatial[:, :body_id]
    matrix[:3, :body_id] = columns[:3] - skew(point) @ columns[3:]
    matrix[3:, :body_id] = columns[3:]
    return matrix


def hybrid_jacobian(
    model: RobotModel,
    q,
    body_id: Optional[int] = None,
    offset: Optional[ArrayLike] = None,
) -> JacobianMatrix:
    """
    Hybrid Jacobian of a point on a body.

    Maps joint rates to the linear velocity of the queried point and the
    body's angular velocity, both in {S}.
    """
    home = point_home_pose(model, body_id, offset)
    state = _state(model, q)
    b = _check_body(model, model.dof if body_id is None else body_id)
    point = compose(state.partial_products[b], home).translation
    matrix = hybrid_from_spatial(state.spatial, point, b)
    offset_vector = np.zeros(3) if offset is None else as_vector3(offset, "offset")
    return JacobianMatrix(matrix, JacobianFlavor.HYBRID, b, offset_vector.copy())


def spatial_velocity(J: JacobianMatrix, qdot: ArrayLike) -> SpatialVelocity:
    """
    Velocity J qdot split into (linear, angular).

    Raises:
        DimensionError: If qdot does not match the Jacobian's column count.
    """
    qdot = np.atleast_1d(np.asarray(qdot, dtype=float))
    if qdot.shape != (J.dof,):
        raise DimensionError(f"qdot must have length {J.dof}, got shape {qdot.shape}")
    twist = J.matrix @ qdot
    return SpatialVelocity(twist[:3], twist[3:])
