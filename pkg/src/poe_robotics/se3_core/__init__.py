"""
SE(3) core package: exact Lie-group primitives for twists and transforms.
"""

from .se3 import (
    AdjointMatrix,
    Transform,
    Twist,
    ad,
    adjoint,
    as_vector3,
    check_rotation,
    check_unit_axis,
    compose,
    exp_twist,
    inverse,
    inverse_adjoint,
    lie_bracket,
    rotation_exp,
    skew,
    translation_kernel,
    vee,
)

__all__ = [
    "AdjointMatrix",
    "Transform",
    "Twist",
    "ad",
    "adjoint",
    "as_vector3",
    "check_rotation",
    "check_unit_axis",
    "compose",
    "exp_twist",
    "inverse",
    "inverse_adjoint",
    "lie_bracket",
    "rotation_exp",
    "skew",
    "translation_kernel",
    "vee",
]
