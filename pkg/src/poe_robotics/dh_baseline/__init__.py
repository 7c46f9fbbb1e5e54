"""
Traditional modified-DH kinematics and dynamics, used as a reference.
"""

from .dh import (
    LINEAR_JACOBIAN_MODES,
    DHModel,
    DHRow,
    dh_coriolis_matrix,
    dh_forward_kinematics,
    dh_frames,
    dh_from_geometry,
    dh_gravity_vector,
    dh_hybrid_jacobian,
    dh_mass_matrix,
    dh_potential_energy,
    dh_transform,
    snake_to_dh,
)
from .franka import franka_to_dh

__all__ = [
    "LINEAR_JACOBIAN_MODES",
    "DHModel",
    "DHRow",
    "dh_coriolis_matrix",
    "dh_forward_kinematics",
    "dh_frames",
    "dh_from_geometry",
    "dh_gravity_vector",
    "dh_hybrid_jacobian",
    "dh_mass_matrix",
    "dh_potential_energy",
    "dh_transform",
    "franka_to_dh",
    "snake_to_dh",
]
