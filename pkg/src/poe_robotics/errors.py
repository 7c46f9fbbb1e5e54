"""
Exception types raised by the poe_robotics toolkit.

Validation failures derive from ValueError and numerical/runtime failures
from RuntimeError, so callers can catch either the specific type or the
builtin base. The CLI maps the two families to exit codes 1 and 2.
"""

from typing import Optional


class InvalidAxisError(ValueError):
    """An axis that must be a unit vector is not."""


class InvalidTwistError(ValueError):
    """A joint twist is neither unit-revolute nor unit-prismatic."""


class InvalidRotationError(ValueError):
    """A 3x3 matrix that must be a rotation is not orthonormal with determinant +1."""


class DimensionError(ValueError):
    """A vector or matrix argument has the wrong length or shape."""


class BodyIndexError(ValueError):
    """A 1-based body index lies outside 1..dof."""


class DescriptionError(ValueError):
    """
    A robot description document failed parsing or validation.

    Attributes:
        field_path: Location of the offending field, e.g. ``bodies[1].mass``.
    """

    def __init__(self, field_path: str, message: str):
        self.field_path = field_path
        super().__init__(f"{field_path}: {message}")


class InsufficientDataError(ValueError):
    """Too few data points for a least-squares fit."""


class SingularInertiaError(RuntimeError):
    """The mass matrix cannot be factorized or is too ill-conditioned."""


class SimulationDivergedError(RuntimeError):
    """
    The integrated state became non-finite.

    Attributes:
        step: Index of the integration step that produced the bad state.
    """

    def __init__(self, step: int, message: Optional[str] = None):
        self.step = step
        super().__init__(message or f"non-finite state at step {step}")


class BenchmarkIntegrityError(RuntimeError):
    """A value computed inside a timing loop differs from its reference."""
