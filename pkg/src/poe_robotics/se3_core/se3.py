"""
SE(3) Lie-group primitives.

Skew maps, closed-form exponentials of unit joint twists, adjoints and the
transform algebra everything else in the toolkit is built on. Twists use
(linear; angular) ordering throughout, so the adjoint of a transform
H = (R, p) is [[R, [p]R], [0, R]].

All functions are pure and operate on immutable values. Angles are in
radians, prismatic displacements in meters.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from poe_robotics.config import CONFIG
from poe_robotics.errors import DimensionError, InvalidAxisError, InvalidRotationError, InvalidTwistError

ArrayLike = Union[Sequence[float], np.ndarray]

# 6x6 real matrix [[R, [p]R], [0, R]]
AdjointMatrix = np.ndarray


def _frozen(values: ArrayLike, shape: tuple, name: str) -> np.ndarray:
    array = np.array(values, dtype=float)
    if array.shape != shape:
        raise DimensionError(f"{name} must have shape {shape}, got {array.shape}")
    array.setflags(write=False)
    return array


def as_vector3(values: ArrayLike, name: str = "vector") -> np.ndarray:
    """Return ``values`` as a float 3-vector or raise DimensionError."""
    array = np.asarray(values, dtype=float)
    if array.shape != (3,):
        raise DimensionError(f"{name} must be a 3-vector, got shape {array.shape}")
    return array


def check_rotation(rotation: ArrayLike, tol: Optional[float] = None) -> np.ndarray:
    """
    Validate that ``rotation`` lies in SO(3).

    Args:
        rotation (ArrayLike): Candidate 3x3 matrix.
        tol (Optional[float]): Largest allowed entry of R^T R - I and of
                               det(R) - 1, default CONFIG.kinematics.unit_tolerance.

    Returns:
        np.ndarray: The rotation as a float array.

    Raises:
        DimensionError: If the matrix is not 3x3.
        InvalidRotationError: If it is not orthonormal or has det(R) != +1.
    """
    tol = CONFIG.kinematics.unit_tolerance if tol is None else tol
    rotation = np.asarray(rotation, dtype=float)
    if rotation.shape != (3, 3):
        raise DimensionError(f"rotation must have shape (3, 3), got {rotation.shape}")
    if not np.all(np.isfinite(rotation)) or np.max(np.abs(rotation.T @ rotation - np.eye(3))) > tol:
        raise InvalidRotationError("rotation must be orthonormal")
    if abs(np.linalg.det(rotation) - 1.0) > tol:
        raise InvalidRotationError("rotation must have determinant +1")
    return rotation


@dataclass(frozen=True, eq=False)
class Transform:
    """
    Homogeneous transformation, an element of SE(3).

    Only the rotation and translation are stored; the bottom row (0 0 0 1)
    is implicit. Arrays are read-only.

    The plain constructor checks shapes only and expects a valid rotation;
    it is the path taken by compose, inverse and exp_twist, whose results
    are rotations by construction. Use :meth:`from_rotation`,
    :meth:`from_matrix` or :func:`check_rotation` for matrices from outside.
    """

    rotation: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "rotation", _frozen(self.rotation, (3, 3), "rotation"))
        object.__setattr__(self, "translation", _frozen(self.translation, (3,), "translation"))

    @classmethod
    def identity(cls) -> "Transform":
        return cls(np.eye(3), np.zeros(3))

    @classmethod
    def from_translation(cls, translation: ArrayLike) -> "Transform":
        return cls(np.eye(3), translation)

    @classmethod
    def from_rotation(cls, rotation: ArrayLike) -> "Transform":
        """Pure rotation; raises InvalidRotationError unless ``rotation`` is in SO(3)."""
        return cls(check_rotation(rotation), np.zeros(3))

    @classmethod
    def from_matrix(cls, matrix: ArrayLike) -> "Transform":
        matrix = np.asarray(matrix, dtype=float)
        if matrix.shape != (4, 4):
            raise DimensionError(f"homogeneous matrix must be 4x4, got {matrix.shape}")
        return cls(check_rotation(matrix[:3, :3]), matrix[:3, 3])

    def matrix(self) -> np.ndarray:
        """The 4x4 homogeneous matrix."""
        out = np.eye(4)
        out[:3, :3] = self.rotation
        out[:3, 3] = self.translation
        return out

    def apply(self, point: ArrayLike) -> np.ndarray:
        """Map a point (not a direction) through the transform."""
        return self.rotation @ as_vector3(point, "point") + self.translation

    def isclose(self, other: "Transform", tol: float = 1e-12) -> bool:
        return bool(
            np.linalg.norm(self.rotation - other.rotation) <= tol
            and np.linalg.norm(self.translation - other.translation) <= tol
        )

    def __matmul__(self, other: "Transform") -> "Transform":
        return compose(self, other)


@dataclass(frozen=True, eq=False)
class Twist:
    """
    Screw coordinates (linear; angular).

    Used both for unit joint twists and for instantaneous velocities.
    """

    linear: np.ndarray
    angular: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "linear", _frozen(self.linear, (3,), "linear"))
        object.__setattr__(self, "angular", _frozen(self.angular, (3,), "angular"))

    @classmethod
    def from_vector(cls, vector: ArrayLike) -> "Twist":
        vector = np.asarray(vector, dtype=float)
        if vector.shape != (6,):
            raise DimensionError(f"twist vector must have 6 entries, got shape {vector.shape}")
        return cls(vector[:3], vector[3:])

    def vector(self) -> np.ndarray:
        return np.concatenate((self.linear, self.angular))

    @property
    def is_unit_revolute(self) -> bool:
        return abs(np.linalg.norm(self.angular) - 1.0) <= CONFIG.kinematics.unit_tolerance

    @property
    def is_unit_prismatic(self) -> bool:
        return (
            np.linalg.norm(self.angular) <= CONFIG.kinematics.zero_tolerance
            and abs(np.linalg.norm(self.linear) - 1.0) <= CONFIG.kinematics.unit_tolerance
        )

    def isclose(self, other: "Twist", tol: float = 1e-12) -> bool:
        return bool(np.linalg.norm(self.vector() - other.vector()) <= tol)


def skew(w: ArrayLike) -> np.ndarray:
    """
    3x3 skew-symmetric matrix [w] with [w] p = w x p.

             [  0 -w3  w2]
       [w] = [ w3   0 -w1]
             [-w2  w1   0]
    """
    w = as_vector3(w, "w")
    return np.array([
        [0.0, -w[2], w[1]],
        [w[2], 0.0, -w[0]],
        [-w[1], w[0], 0.0],
    ])


def vee(matrix: ArrayLike) -> np.ndarray:
    """Inverse of :func:`skew`; the antisymmetric part is used."""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (3, 3):
        raise DimensionError(f"vee expects a 3x3 matrix, got {matrix.shape}")
    return 0.5 * np.array([
        matrix[2, 1] - matrix[1, 2],
        matrix[0, 2] - matrix[2, 0],
        matrix[1, 0] - matrix[0, 1],
    ])


def check_unit_axis(axis: ArrayLike, name: str = "axis") -> np.ndarray:
    """Return ``axis`` as a 3-vector, raising InvalidAxisError unless it is unit length."""
    axis = as_vector3(axis, name)
    norm = float(np.linalg.norm(axis))
    if abs(norm - 1.0) > CONFIG.kinematics.unit_tolerance:
        raise InvalidAxisError(f"{name} must be a unit vector (norm = {norm!r})")
    return axis


def _rodrigues_terms(w_hat: np.ndarray, q: float):
    W = skew(w_hat)
    W2 = W @ W
    s, c = np.sin(q), np.cos(q)
    return W, W2, s, c


def rotation_exp(w_hat: ArrayLike, q: float) -> np.ndarray:
    """
    Rotation exp([w] q) = I + sin q [w] + (1 - cos q) [w]^2.

    Raises:
        InvalidAxisError: If ``w_hat`` is not a unit vector.
    """
    w_hat = check_unit_axis(w_hat, "w_hat")
    W, W2, s, c = _rodrigues_terms(w_hat, q)
    return np.eye(3) + s * W + (1.0 - c) * W2


def translation_kernel(w_hat: ArrayLike, q: float) -> np.ndarray:
    """
    G(q) = I q + (1 - cos q) [w] + (q - sin q) [w]^2.

    G(q) v is the translation of exp([eta] q) for a unit revolute twist
    eta = (v, w_hat).
    """
    w_hat = check_unit_axis(w_hat, "w_hat")
    W, W2, s, c = _rodrigues_terms(w_hat, q)
    return np.eye(3) * q + (1.0 - c) * W + (q - s) * W2


def exp_twist(eta: Twist, q: float) -> Transform:
    """
    Closed-form exponential exp([eta] q) of a unit joint twist.

    Revolute twists (unit angular part) use the Rodrigues rotation and the
    translation kernel; prismatic twists (zero angular, unit linear part)
    give the pure translation q v.

    Raises:
        InvalidTwistError: If ``eta`` is neither unit-revolute nor unit-prismatic.
    """
    if eta.is_unit_revolute:
        W, W2, s, c = _rodrigues_terms(eta.angular, q)
        rotation = np.eye(3) + s * W + (1.0 - c) * W2
        kernel = np.eye(3) * q + (1.0 - c) * W + (q - s) * W2
        return Transform(rotation, kernel @ eta.linear)
    if eta.is_unit_prismatic:
        return Transform(np.eye(3), q * eta.linear)
    raise InvalidTwistError(
        f"twist must be unit revolute or unit prismatic "
        f"(|angular| = {np.linalg.norm(eta.angular)!r}, |linear| = {np.linalg.norm(eta.linear)!r})"
    )


def compose(H1: Transform, H2: Transform) -> Transform:
    """Matrix product H1 H2. No re-orthonormalization is applied."""
    return Transform(H1.rotation @ H2.rotation, H1.rotation @ H2.translation + H1.translation)


def inverse(H: Transform) -> Transform:
    """Inverse transform (R^T, -R^T p)."""
    rotation_t = H.rotation.T
    return Transform(rotation_t, -rotation_t @ H.translation)


def adjoint(H: Transform) -> AdjointMatrix:
    """6x6 adjoint [[R, [p]R], [0, R]] transporting twists from the frame of H."""
    out = np.zeros((6, 6))
    out[:3, :3] = H.rotation
    out[:3, 3:] = skew(H.translation) @ H.rotation
    out[3:, 3:] = H.rotation
    return out


def inverse_adjoint(H: Transform) -> AdjointMatrix:
    """Ad(H)^-1 = Ad(H^-1), assembled blockwise."""
    return adjoint(inverse(H))


def ad(twist: Union[Twist, ArrayLike]) -> np.ndarray:
    """
    Lie-algebra adjoint ad_V = [[ [w], [v] ], [0, [w]]] of V = (v; w).

    ad_V W is the Lie bracket [V, W]; d/dq Ad(exp([V] q)) = ad_V Ad(exp([V] q)).
    """
    vector = twist.vector() if isinstance(twist, Twist) else np.asarray(twist, dtype=float)
    if vector.shape != (6,):
        raise DimensionError(f"ad expects a 6-vector, got shape {vector.shape}")
    out = np.zeros((6, 6))
    W = skew(vector[3:])
    out[:3, :3] = W
    out[:3, 3:] = skew(vector[:3])
    out[3:, 3:] = W
    return out


def lie_bracket(a: ArrayLike, b: ArrayLike) -> np.ndarray:
    """[a, b] = ad_a b for twist vectors in (linear; angular) order."""
    return ad(a) @ np.asarray(b, dtype=float)
