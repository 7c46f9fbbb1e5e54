"""
Modified-DH description of the Franka arm.

The manufacturer's table places seven link frames plus a flange; the tool
transform Rot_x(pi) aligns the last link frame with the end-effector frame
of the geometric model, and the inertial data are re-expressed from it.
"""

import math

from poe_robotics.dh_baseline.dh import DHModel, DHRow, dh_from_geometry
from poe_robotics.robots.zoo import make_franka
from poe_robotics.se3_core import Transform

FRANKA_A = (0.0, 0.0, 0.0, 0.0825, -0.0825, 0.0, 0.088)
FRANKA_D = (0.333, 0.0, 0.316, 0.0, 0.384, 0.0, 0.0)
FRANKA_ALPHA = (0.0, -math.pi / 2, math.pi / 2, math.pi / 2, -math.pi / 2, math.pi / 2, math.pi / 2)


def franka_to_dh() -> DHModel:
    """
    The Franka arm as a modified-DH model.

    Seven revolute rows from FRANKA_A/FRANKA_D/FRANKA_ALPHA plus the tool
    rotation; masses, COM frames and inertias come from :func:`make_franka`
    so both pipelines describe the same robot.

    Returns:
        DHModel: Model named "franka_dh" whose end-effector sits at
                 (0.088, 0, 1.033) with identity rotation at q = 0.
    """
    rows = [DHRow(a=a, alpha=alpha, d=d) for a, alpha, d in zip(FRANKA_A, FRANKA_ALPHA, FRANKA_D)]
    tool = Transform.from_rotation([[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, -1.0]])
    return dh_from_geometry("franka_dh", rows, tool, make_franka())
