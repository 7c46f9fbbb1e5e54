"""
Robot description types.

A RobotModel is an ordered open chain of joints given by their axes and
origins at the home configuration q = 0, one rigid body per joint with its
inertial data and home COM frame, the home end-effector pose and a gravity
vector. Joint twists and generalized inertias are computed once at
construction and reused by every kinematic and dynamic query.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np

from poe_robotics.errors import DimensionError
from poe_robotics.se3_core import Transform, Twist, as_vector3, check_rotation, check_unit_axis, compose
from poe_robotics.se3_core.se3 import ArrayLike

# Tolerance for the physical-consistency checks on inertia tensors
INERTIA_TOLERANCE = 1e-9

# 6x6 block-diagonal diag(m I3, inertia)
GeneralizedInertia = np.ndarray


class JointKind(str, Enum):
    REVOLUTE = "revolute"
    PRISMATIC = "prismatic"


def make_revolute_twist(axis: ArrayLike, point: ArrayLike) -> Twist:
    """
    Unit twist of a revolute joint: eta = (-axis x point, axis).

    Any point on the axis gives the same twist.

    Raises:
        InvalidAxisError: If ``axis`` is not a unit vector.
    """
    axis = check_unit_axis(axis)
    point = as_vector3(point, "point")
    return Twist(-np.cross(axis, point), axis)


def make_prismatic_twist(axis: ArrayLike) -> Twist:
    """Unit twist of a prismatic joint: eta = (axis, 0)."""
    axis = check_unit_axis(axis)
    return Twist(axis, np.zeros(3))


def inertia_problems(inertia: np.ndarray) -> Optional[str]:
    """
    Describe why ``inertia`` is not a physical rotational inertia, or None.

    Checks symmetry, positive semi-definiteness and the triangle
    inequalities on the principal moments.
    """
    if not np.all(np.isfinite(inertia)):
        return "inertia has non-finite entries"
    if np.max(np.abs(inertia - inertia.T)) > INERTIA_TOLERANCE:
        return "inertia must be symmetric"
    principal = np.linalg.eigvalsh(inertia)
    if principal[0] < -INERTIA_TOLERANCE:
        return f"inertia must be positive semidefinite (smallest principal moment {principal[0]!r})"
    a, b, c = principal
    if a + b < c - INERTIA_TOLERANCE:
        return f"principal moments {tuple(principal)} violate the triangle inequality"
    return None


@dataclass(frozen=True, eq=False)
class JointSpec:
    """
    One joint at the home configuration, expressed in the base frame {S}.

    ``origin`` is a point on a revolute joint's axis; it is ignored for
    prismatic joints.
    """

    kind: JointKind
    axis: np.ndarray
    origin: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        object.__setattr__(self, "kind", JointKind(self.kind))
        axis = check_unit_axis(self.axis).copy()
        axis.setflags(write=False)
        origin = np.array(as_vector3(self.origin, "origin"))
        origin.setflags(write=False)
        object.__setattr__(self, "axis", axis)
        object.__setattr__(self, "origin", origin)

    def twist(self) -> Twist:
        if self.kind is JointKind.REVOLUTE:
            return make_revolute_twist(self.axis, self.origin)
        return make_prismatic_twist(self.axis)


@dataclass(frozen=True, eq=False)
class BodySpec:
    """
    Inertial data of one rigid body.

    ``inertia`` is the rotational inertia about the COM expressed in the
    body frame {C_i}, whose home pose in {S} is ``com_home``. Massless bodies
    are accepted for programmatic models; description documents require a
    positive mass.
    """

    mass: float
    com_home: Transform
    inertia: np.ndarray

    def __post_init__(self):
        mass = float(self.mass)
        if not np.isfinite(mass) or mass < 0.0:
            raise ValueError(f"body mass must be finite and non-negative (got {self.mass!r})")
        inertia = np.array(self.inertia, dtype=float)
        if inertia.shape != (3, 3):
            raise DimensionError(f"inertia must be 3x3, got shape {inertia.shape}")
        check_rotation(self.com_home.rotation)
        problem = inertia_problems(inertia)
        if problem is not None:
            raise ValueError(problem)
        inertia.setflags(write=False)
        object.__setattr__(self, "mass", mass)
        object.__setattr__(self, "inertia", inertia)


def generalized_inertia(body: BodySpec) -> GeneralizedInertia:
    """Block-diagonal generalized inertia diag(m I3, inertia)."""
    out = np.zeros((6, 6))
    out[:3, :3] = body.mass * np.eye(3)
    out[3:, 3:] = body.inertia
    return out


@dataclass(frozen=True, eq=False)
class RobotModel:
    """
    Immutable open-chain robot description.

    Joint and body lists are 1-based in the mathematical sense (joint 1 is
    at the base) and stored as 0-based tuples. Construction computes and
    caches the unit joint twists and generalized inertias.
    """

    name: str
    joints: Tuple[JointSpec, ...]
    bodies: Tuple[BodySpec, ...]
    ee_home: Transform = field(default_factory=Transform.identity)
    gravity: np.ndarray = field(default_factory=lambda: np.array([0.0, 0.0, -9.81]))
    joint_twists: Tuple[Twist, ...] = field(init=False)
    generalized_inertias: Tuple[GeneralizedInertia, ...] = field(init=False)

    def __post_init__(self):
        joints = tuple(self.joints)
        bodies = tuple(self.bodies)
        if len(joints) != len(bodies):
            raise DimensionError(
                f"robot '{self.name}' has {len(joints)} joints but {len(bodies)} bodies"
            )
        check_rotation(self.ee_home.rotation)
        gravity = np.array(as_vector3(self.gravity, "gravity"))
        gravity.setflags(write=False)
        object.__setattr__(self, "joints", joints)
        object.__setattr__(self, "bodies", bodies)
        object.__setattr__(self, "gravity", gravity)
        object.__setattr__(self, "joint_twists", tuple(joint.twist() for joint in joints))
        object.__setattr__(self, "generalized_inertias", tuple(generalized_inertia(b) for b in bodies))

    @property
    def dof(self) -> int:
        return len(self.joints)

    @property
    def joint_kinds(self) -> Tuple[JointKind, ...]:
        return tuple(joint.kind for joint in self.joints)

    @property
    def com_home_list(self) -> Tuple[Transform, ...]:
        return tuple(body.com_home for body in self.bodies)

    def isclose(self, other: "RobotModel", tol: float = 1e-12) -> bool:
        """Field-wise comparison of everything but the name."""
        if self.dof != other.dof or self.joint_kinds != other.joint_kinds:
            return False
        if not self.ee_home.isclose(other.ee_home, tol):
            return False
        if np.max(np.abs(self.gravity - other.gravity)) > tol:
            return False
        for a, b in zip(self.joints, other.joints):
            if np.max(np.abs(a.axis - b.axis)) > tol or np.max(np.abs(a.origin - b.origin)) > tol:
                return False
        for a, b in zip(self.bodies, other.bodies):
            if abs(a.mass - b.mass) > tol or np.max(np.abs(a.inertia - b.inertia)) > tol:
                return False
            if not a.com_home.isclose(b.com_home, tol):
                return False
        return True


@dataclass(frozen=True, eq=False)
class JointState:
    """Joint positions (rad or m) and rates (rad/s or m/s)."""

    q: np.ndarray
    qdot: np.ndarray

    @classmethod
    def for_model(cls, model: RobotModel, q: ArrayLike, qdot: Optional[ArrayLike] = None) -> "JointState":
        q = as_joint_vector(model, q, "q")
        qdot = np.zeros(model.dof) if qdot is None else as_joint_vector(model, qdot, "qdot")
        return cls(q, qdot)


def as_joint_vector(model: RobotModel, values: ArrayLike, name: str = "q") -> np.ndarray:
    """Return ``values`` as a float n-vector for ``model`` or raise DimensionError."""
    array = np.atleast_1d(np.asarray(values, dtype=float))
    if array.shape != (model.dof,):
        raise DimensionError(f"{name} must have length {model.dof}, got shape {np.shape(values)}")
    return array


def attach_serial(base: RobotModel, appendage: RobotModel, mount: Transform) -> RobotModel:
    """
    Mount ``appendage`` on the end-effector of ``base``.

    ``mount`` is the pose of the appendage's base frame in the base robot's
    end-effector frame at home. Appendage joints, COM frames and its
    end-effector are re-expressed in the base {S} through
    H = base.ee_home * mount; twists are recomputed for the combined chain.
    The base robot's gravity is kept.
    """
    H = compose(base.ee_home, mount)
    joints = list(base.joints)
    for joint in appendage.joints:
        joints.append(JointSpec(joint.kind, H.rotation @ joint.axis, H.apply(joint.origin)))
    bodies = list(base.bodies)
    for body in appendage.bodies:
        bodies.append(BodySpec(body.mass, compose(H, body.com_home), body.inertia))
    return RobotModel(
        name=f"{base.name}+{appendage.name}",
        joints=tuple(joints),
        bodies=tuple(bodies),
        ee_home=compose(H, appendage.ee_home),
        gravity=base.gravity,
    )
