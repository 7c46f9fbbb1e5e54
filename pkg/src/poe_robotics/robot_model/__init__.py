"""
Robot model package: joint/body descriptions, description documents and
serial composition of robots.
"""

from .model import (
    BodySpec,
    GeneralizedInertia,
    JointKind,
    JointSpec,
    JointState,
    RobotModel,
    as_joint_vector,
    attach_serial,
    generalized_inertia,
    inertia_problems,
    make_prismatic_twist,
    make_revolute_twist,
)
from .description import load_robot, load_robot_file, parse_robot_document, robot_document, save_robot

__all__ = [
    "BodySpec",
    "GeneralizedInertia",
    "JointKind",
    "JointSpec",
    "JointState",
    "RobotModel",
    "as_joint_vector",
    "attach_serial",
    "generalized_inertia",
    "inertia_problems",
    "load_robot",
    "load_robot_file",
    "make_prismatic_twist",
    "make_revolute_twist",
    "parse_robot_document",
    "robot_document",
    "save_robot",
]
