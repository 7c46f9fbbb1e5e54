"""
Robot zoo package: constructors and shipped description documents.
"""

from .zoo import (
    DESCRIPTIONS_DIR,
    FRANKA_READY_POSE,
    SHIPPED_DESCRIPTIONS,
    ZOO_ROBOTS,
    load_zoo_robot,
    make_cartpole,
    make_franka,
    make_snake,
    shipped_description_path,
    snake_description,
)

__all__ = [
    "DESCRIPTIONS_DIR",
    "FRANKA_READY_POSE",
    "SHIPPED_DESCRIPTIONS",
    "ZOO_ROBOTS",
    "load_zoo_robot",
    "make_cartpole",
    "make_franka",
    "make_snake",
    "shipped_description_path",
    "snake_description",
]
