"""
Built-in robot zoo: the planar snake, the cart-pole and the Franka arm.

Each robot is available as a RobotModel constructor and as a description
document shipped in ``robots/descriptions``.
"""

import math
from pathlib import Path
from typing import Optional

import numpy as np

from poe_robotics.logging_utils.logging_config import get_logger
from poe_robotics.robot_model import (
    BodySpec,
    JointKind,
    JointSpec,
    RobotModel,
    load_robot_file,
    save_robot,
)
from poe_robotics.se3_core import Transform
from poe_robotics.utils.path_utils import resolve_path

logger = get_logger("poe_robotics.robots")

DESCRIPTIONS_DIR = resolve_path("robots/descriptions")

SHIPPED_DESCRIPTIONS = ("snake_n", "cartpole", "franka")

ZOO_ROBOTS = ("snake", "cartpole", "franka")

PLANAR_GRAVITY = (0.0, -9.81, 0.0)

# A non-singular, elbow-bent configuration of the Franka arm
FRANKA_READY_POSE = (0.0, -math.pi / 4, 0.0, -3 * math.pi / 4, 0.0, math.pi / 2, math.pi / 4)

# Edge length of the cube used for the cart's rotational inertia
_CART_SIZE = 0.2


def _check_positive(**values: float) -> None:
    for name, value in values.items():
        if isinstance(value, bool) or not math.isfinite(value) or value <= 0:
            raise ValueError(f"{name} must be positive (got {value!r})")


def _rod_inertia(mass: float, length: float, axial: int) -> np.ndarray:
    transverse = mass * length ** 2 / 12.0
    diagonal = [transverse, transverse, transverse]
    diagonal[axial] = 0.0
    return np.diag(diagonal)


def make_snake(n: int, l: float = 1.0, m_each: float = 1.0) -> RobotModel:
    """
    Planar snake of ``n`` identical uniform bars swinging in the x-y plane.

    All joints rotate about z; joint i sits at ((i-1) l, 0, 0) and the COM of
    bar i at ((i-1) l + l/2, 0, 0). Bars are slender rods along x, so the
    axial inertia is zero and both transverse moments are m l^2 / 12.

    Raises:
        ValueError: If n < 1 or l, m_each are not positive.
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"snake needs at least one link (got n = {n!r})")
    _check_positive(l=l, m_each=m_each)
    n = int(n)
    joints = [
        JointSpec(JointKind.REVOLUTE, (0.0, 0.0, 1.0), (i * l, 0.0, 0.0))
        for i in range(n)
    ]
    bodies = [
        BodySpec(m_each, Transform.from_translation((i * l + l / 2.0, 0.0, 0.0)), _rod_inertia(m_each, l, 0))
        for i in range(n)
    ]
    return RobotModel(
        name=f"snake_{n}",
        joints=tuple(joints),
        bodies=tuple(bodies),
        ee_home=Transform.from_translation((n * l, 0.0, 0.0)),
        gravity=PLANAR_GRAVITY,
    )


def make_cartpole(m_cart: float = 1.0, m_pole: float = 1.0, l: float = 1.0) -> RobotModel:
    """
    Cart sliding along x carrying a pole hinged about z at the cart origin.

    At home the pole points up (+y) with its COM l/2 above the pivot; the
    end-effector is the pole tip. The cart is a cube of edge 0.2 m and the
    pole a slender rod.
    """
    _check_positive(m_cart=m_cart, m_pole=m_pole, l=l)
    cart_inertia = np.eye(3) * m_cart * 2.0 * _CART_SIZE ** 2 / 12.0
    joints = (
        JointSpec(JointKind.PRISMATIC, (1.0, 0.0, 0.0)),
        JointSpec(JointKind.REVOLUTE, (0.0, 0.0, 1.0), (0.0, 0.0, 0.0)),
    )
    bodies = (
        BodySpec(m_cart, Transform.identity(), cart_inertia),
        BodySpec(m_pole, Transform.from_translation((0.0, l / 2.0, 0.0)), _rod_inertia(m_pole, l, 1)),
    )
    return RobotModel(
        name="cartpole",
        joints=joints,
        bodies=bodies,
        ee_home=Transform.from_translation((0.0, l, 0.0)),
        gravity=PLANAR_GRAVITY,
    )


def shipped_description_path(name: str) -> Path:
    """Path of a shipped description document ("snake_n", "cartpole" or "franka")."""
    if name not in SHIPPED_DESCRIPTIONS:
        raise ValueError(f"no shipped description named {name!r}; expected one of {SHIPPED_DESCRIPTIONS}")
    return DESCRIPTIONS_DIR / f"{name}.json"


def make_franka() -> RobotModel:
    """
    Seven-joint Franka arm loaded from the shipped description.

    Joint axes and origins follow the manufacturer's published kinematics;
    the home end-effector sits at (0.088, 0, 1.033) with identity rotation.
    The inertial parameters in the document are placeholders of plausible
    magnitude, not identified values.
    """
    return load_robot_file(shipped_description_path("franka"))


def snake_description(n: int, l: float = 1.0, m_each: float = 1.0) -> str:
    """Description document of ``make_snake(n, l, m_each)``."""
    return save_robot(make_snake(n, l, m_each))


def load_zoo_robot(name: str, dof: Optional[int] = None) -> RobotModel:
    """
    Resolve a robot by zoo name or description path.

    ``dof`` selects the snake length (default 2); for the fixed-size robots
    it must match their dof when given. Any other name is read as a path to
    a description document.
    """
    if name == "snake":
        return make_snake(2 if dof is None else dof)
    if name == "cartpole":
        model = make_cartpole()
    elif name == "franka":
        model = make_franka()
    else:
        path = Path(name)
        if not path.is_file():
            raise ValueError(f"unknown robot {name!r}: not one of {ZOO_ROBOTS} and no such file")
        model = load_robot_file(path)
    if dof is not None and dof != model.dof:
        raise ValueError(f"robot '{model.name}' has {model.dof} joints, --dof {dof} was requested")
    logger.debug(f"Resolved robot '{name}' to model '{model.name}' ({model.dof} DOF)")
    return model
