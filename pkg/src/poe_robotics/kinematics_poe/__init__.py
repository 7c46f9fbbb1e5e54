"""
Product-of-exponentials kinematics package.
"""

from .kinematics import (
    JacobianFlavor,
    JacobianMatrix,
    KinematicState,
    SpatialVelocity,
    body_jacobian,
    forward_kinematics,
    hybrid_from_spatial,
    hybrid_jacobian,
    point_home_pose,
    spatial_jacobian,
    spatial_velocity,
    update_kinematics,
)

__all__ = [
    "JacobianFlavor",
    "JacobianMatrix",
    "KinematicState",
    "SpatialVelocity",
    "body_jacobian",
    "forward_kinematics",
    "hybrid_from_spatial",
    "hybrid_jacobian",
    "point_home_pose",
    "spatial_jacobian",
    "spatial_velocity",
    "update_kinematics",
]
