"""
Geometric rigid-body dynamics.

The mass matrix is assembled from body Jacobians at each COM and the
generalized inertias, M(q) = sum_i J_i^T M_i J_i. Gravity is the gradient
of the potential energy, the Coriolis matrix is built from Christoffel
symbols of the mass-matrix partials, and forward dynamics solves
M qdd = tau - C qd - G with a Cholesky factorization.
"""

from typing import List, Optional, Tuple

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from poe_robotics.config import CONFIG
from poe_robotics.errors import SingularInertiaError
from poe_robotics.kinematics_poe.kinematics import KinematicState, hybrid_from_spatial, update_kinematics
from poe_robotics.logging_utils.logging_config import get_logger
from poe_robotics.robot_model.model import RobotModel, as_joint_vector
from poe_robotics.se3_core import ad, compose, inverse_adjoint
from poe_robotics.se3_core.se3 import ArrayLike

logger = get_logger("poe_robotics.dynamics")

PARTIALS_METHODS = ("finite_difference", "analytic")


def _state(model: RobotModel, q) -> KinematicState:
    if isinstance(q, KinematicState):
        return q
    return update_kinematics(model, q)


def _com_poses(model: RobotModel, state: KinematicState):
    return [
        compose(state.partial_products[i + 1], com_home)
        for i, com_home in enumerate(model.com_home_list)
    ]


def _com_linear_jacobians(model: RobotModel, state: KinematicState) -> List[Tuple[np.ndarray, np.ndarray]]:
    """(COM position, 3 x n linear Jacobian of the COM) for every body."""
    out = []
    for i, pose in enumerate(_com_poses(model, state)):
        J = hybrid_from_spatial(state.spatial, pose.translation, i + 1)
        out.append((pose.translation, J[:3]))
    return out


def mass_matrix(model: RobotModel, q) -> np.ndarray:
    """
    Mass matrix M(q) = sum_i J_i^T M_i J_i over body Jacobians at each COM.

    Args:
        model (RobotModel): The robot.
        q: Joint vector of length dof, or a KinematicState to reuse.

    Returns:
        np.ndarray: n x n matrix, exactly symmetric and positive definite for
                    robots whose bodies all carry inertia.

    Raises:
        DimensionError: If q has the wrong length.

    Example:
        >>> mass_matrix(make_snake(1), [0.0])
        array([[0.33333333]])
    """
    state = _state(model, q)
    n = model.dof
    M = np.zeros((n, n))
    for i, pose in enumerate(_com_poses(model, state)):
        J = np.zeros((6, n))
        J[:, : i + 1] = inverse_adjoint(pose) @ state.spatial[:, : i + 1]
        M += J.T @ model.generalized_inertias[i] @ J
    return 0.5 * (M + M.T)


def gravity_vector(model: RobotModel, q) -> np.ndarray:
    """
    Generalized gravity G(q) = sum_i J_v,i^T (-m_i g), equal to dV/dq.

    Args:
        model (RobotModel): The robot; ``model.gravity`` is the field g in {S}.
        q: Joint vector of length dof, or a KinematicState.

    Returns:
        np.ndarray: Joint forces needed to hold the robot still at q.
    """
    state = _state(model, q)
    G = np.zeros(model.dof)
    for body, (_, Jv) in zip(model.bodies, _com_linear_jacobians(model, state)):
        G += Jv.T @ (-body.mass * model.gravity)
    return G


def potential_energy(model: RobotModel, q) -> float:
    """V(q) = sum_i -m_i g . p_i(q) with p_i the COM positions."""
    state = _state(model, q)
    return float(sum(
        -body.mass * model.gravity @ pose.translation
        for body, pose in zip(model.bodies, _com_poses(model, state))
    ))


def kinetic_energy(model: RobotModel, q, qdot: ArrayLike) -> float:
    """Kinetic co-energy 1/2 qdot^T M(q) qdot."""
    qdot = as_joint_vector(model, qdot, "qdot")
    return float(0.5 * qdot @ mass_matrix(model, q) @ qdot)


def _finite_difference_partials(model: RobotModel, q: np.ndarray) -> np.ndarray:
    n = model.dof
    dM = np.zeros((n, n, n))
    for k in range(n):
        h = CONFIG.dynamics.fd_relative_step * max(1.0, abs(q[k]))
        forward = q.copy()
        backward = q.copy()
        forward[k] += h
        backward[k] -= h
        dM[:, :, k] = (mass_matrix(model, forward) - mass_matrix(model, backward)) / (2.0 * h)
    return dM


def _analytic_partials(model: RobotModel, q: np.ndarray) -> np.ndarray:
    # d/dq_k of body column j of body i is -Ad(H_i^-1) [Js_k, Js_j] for j < k <= i, zero otherwise
    state = update_kinematics(model, q)
    n = model.dof
    Js = state.spatial
    brackets = np.stack([ad(Js[:, k]) @ Js for k in range(n)])  # (k, 6, j)
    below = np.tril(np.ones((n, n)), -1)  # below[k, j] = 1 for j < k
    dM = np.zeros((n, n, n))
    for i, pose in enumerate(_com_poses(model, state)):
        X = inverse_adjoint(pose)
        J = np.zeros((6, n))
        J[:, : i + 1] = X @ Js[:, : i + 1]
        F = model.generalized_inertias[i] @ J
        dJ = -np.einsum("ab,kbj->kaj", X, brackets[: i + 1]) * below[: i + 1, None, :]
        T = np.einsum("kaj,al->jlk", dJ, F)
        dM[:, :, : i + 1] += T + T.transpose(1, 0, 2)
    return dM


def mass_matrix_partials(model: RobotModel, q: ArrayLike, method: Optional[str] = None) -> np.ndarray:
    """
    Tensor dM[i, j, k] = dM_ij / dq_k.

    Args:
        model (RobotModel): The robot.
        q (ArrayLike): Joint vector of length dof.
        method (Optional[str]): "finite_difference" (central differences with
                                step h = fd_relative_step * max(1, |q_k|)) or
                                "analytic" (Lie brackets of spatial Jacobian
                                columns). Default CONFIG.dynamics.partials_method.

    Returns:
        np.ndarray: n x n x n tensor, symmetric in (i, j).

    Raises:
        ValueError: On an unknown method.

    Note:
        The two methods agree to about 1e-6; finite differences cost 2n mass
        matrix evaluations.
    """
    q = as_joint_vector(model, q, "q")
    method = method or CONFIG.dynamics.partials_method
    if method == "finite_difference":
        dM = _finite_difference_partials(model, q)
    elif method == "analytic":
        dM = _analytic_partials(model, q)
    else:
        raise ValueError(f"unknown partials method {method!r}; expected one of {PARTIALS_METHODS}")
    return 0.5 * (dM + dM.transpose(1, 0, 2))


def christoffel_coriolis(dM: np.ndarray, qdot: np.ndarray) -> np.ndarray:
    """
    C_ij = sum_k 1/2 (dM_ij/dq_k + dM_ik/dq_j - dM_jk/dq_i) qdot_k.

    With this choice Mdot - 2C is skew-symmetric.
    """
    return 0.5 * (
        np.einsum("ijk,k->ij", dM, qdot)
        + np.einsum("ikj,k->ij", dM, qdot)
        - np.einsum("jki,k->ij", dM, qdot)
    )


def coriolis_matrix(model: RobotModel, q: ArrayLike, qdot: ArrayLike, method: Optional[str] = None) -> np.ndarray:
    """
    Coriolis matrix C(q, qdot) from the Christoffel symbols of M(q).

    Args:
        model (RobotModel): The robot.
        q (ArrayLike): Joint positions.
        qdot (ArrayLike): Joint rates.
        method (Optional[str]): Partials method, see :func:`mass_matrix_partials`.

    Returns:
        np.ndarray: n x n matrix with Mdot - 2C skew-symmetric.
    """
    qdot = as_joint_vector(model, qdot, "qdot")
    return christoffel_coriolis(mass_matrix_partials(model, q, method), qdot)


def solve_mass_system(M: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """
    Solve M x = rhs for a symmetric positive definite M without forming M^-1.

    Raises:
        SingularInertiaError: If M is not positive definite or its condition
                              number exceeds CONFIG.dynamics.max_condition_number.
    """
    condition = np.linalg.cond(M)
    if not np.isfinite(condition) or condition > CONFIG.dynamics.max_condition_number:
        logger.warning(f"Rejecting mass matrix with condition number {condition:.3e}")
        raise SingularInertiaError(f"mass matrix is ill-conditioned (condition number {condition:.3e})")
    try:
        factor = cho_factor(M)
    except LinAlgError as e:
        logger.warning(f"Cholesky factorization failed: {e}")
        raise SingularInertiaError(f"mass matrix is not positive definite: {e}")
    return cho_solve(factor, rhs)


def forward_dynamics(model: RobotModel, q: ArrayLike, qdot: ArrayLike, tau: ArrayLike) -> np.ndarray:
    """
    Joint accelerations qdd = M(q)^-1 (tau - C(q, qdot) qdot - G(q)).

    Args:
        model (RobotModel): The robot.
        q (ArrayLike): Joint positions.
        qdot (ArrayLike): Joint rates.
        tau (ArrayLike): Applied joint forces/torques.

    Returns:
        np.ndarray: Joint accelerations, length dof.

    Raises:
        DimensionError: If any input has the wrong length.
        SingularInertiaError: If M(q) is singular or ill-conditioned.

    Example:
        >>> forward_dynamics(make_snake(1), [0.0], [0.0], [0.0])  # falls under gravity
        array([-14.715])
    """
    q = as_joint_vector(model, q, "q")
    qdot = as_joint_vector(model, qdot, "qdot")
    tau = as_joint_vector(model, tau, "tau")
    state = update_kinematics(model, q)
    M = mass_matrix(model, state)
    G = gravity_vector(model, state)
    C = coriolis_matrix(model, q, qdot)
    return solve_mass_system(M, tau - C @ qdot - G)


def inverse_dynamics(model: RobotModel, q: ArrayLike, qdot: ArrayLike, qddot: ArrayLike) -> np.ndarray:
    """Joint forces tau = M(q) qdd + C(q, qdot) qdot + G(q) in matrix form."""
    q = as_joint_vector(model, q, "q")
    qdot = as_joint_vector(model, qdot, "qdot")
    qddot = as_joint_vector(model, qddot, "qddot")
    state = update_kinematics(model, q)
    return mass_matrix(model, state) @ qddot + coriolis_matrix(model, q, qdot) @ qdot + gravity_vector(model, state)
