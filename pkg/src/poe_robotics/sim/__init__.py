"""
Simulation package: fixed-step integration and impedance control.
"""

from .simulation import (
    Controller,
    Integrator,
    SimConfig,
    Trajectory,
    simulate,
    total_energy,
    trajectory_header,
    write_trajectory_csv,
)
from .impedance import (
    ElbowTask,
    as_gain,
    circular_target,
    impedance_controller,
    impedance_torque,
    plane_basis,
)

__all__ = [
    "Controller",
    "ElbowTask",
    "Integrator",
    "SimConfig",
    "Trajectory",
    "as_gain",
    "circular_target",
    "impedance_controller",
    "impedance_torque",
    "plane_basis",
    "simulate",
    "total_energy",
    "trajectory_header",
    "write_trajectory_csv",
]
