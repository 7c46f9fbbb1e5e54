"""
Toolkit Configuration Module

Centralized configuration for the poe_robotics toolkit. Python dataclasses
define each section with type hints and defaults; no external configuration
files are required.

The configuration is organized into logical sections:
- KinematicsConfig: tolerances for unit axes and twist classification
- DynamicsConfig: mass-matrix partials and the forward-dynamics solve
- DHConfig: the traditional pipeline's numerical Jacobian
- SimulationConfig: integration and impedance-demo defaults
- BenchmarkConfig: timing-harness defaults
- OutputConfig: numeric formatting of every emitted document
- AppConfig: Main configuration combining all sections

Usage:
    from poe_robotics.config import CONFIG

    print(CONFIG.simulation.dt)

    # Modify settings at runtime
    CONFIG.dynamics.partials_method = "analytic"
"""

from dataclasses import dataclass, field


@dataclass
class KinematicsConfig:
    """
    Tolerances of the Lie-group layer.

    Attributes:
        unit_tolerance (float): Allowed deviation of an axis norm from 1.
        zero_tolerance (float): Angular norm below which a twist is prismatic.
    """

    unit_tolerance: float = 1e-9
    zero_tolerance: float = 1e-9


@dataclass
class DynamicsConfig:
    """
    Rigid-body dynamics settings.

    Attributes:
        partials_method (str): "finite_difference" (central differences of the
                               mass matrix) or "analytic" (Lie-bracket chain).
        fd_relative_step (float): Step h = fd_relative_step * max(1, |q_k|).
        max_condition_number (float): Mass matrices above this condition
                                      number are rejected as singular.
    """

    partials_method: str = "finite_difference"
    fd_relative_step: float = 1e-6
    max_condition_number: float = 1e12


@dataclass
class DHConfig:
    """Traditional (modified DH) pipeline settings."""

    # Central-difference step of the linear Jacobian block
    jacobian_fd_step: float = 1e-7


@dataclass
class SimulationConfig:
    """
    Fixed-step simulation and impedance-demo defaults.

    The impedance gains and circle parameters carry no authority beyond
    producing a well-behaved demo.
    """

    dt: float = 1e-3
    duration: float = 10.0
    integrator: str = "rk4"
    record_stride: int = 1
    stiffness: float = 100.0
    damping: float = 20.0
    circle_radius: float = 0.1
    circle_period: float = 5.0


@dataclass
class BenchmarkConfig:
    """Timing-harness defaults."""

    reps: int = 100
    warmup: int = 10
    dof_range: str = "2:64:2"
    min_fit_points: int = 4


@dataclass
class OutputConfig:
    """Numeric formatting shared by every CSV/text document the toolkit writes."""

    float_format: str = "%.12g"


@dataclass
class AppConfig:
    """
    Main configuration combining all configuration sections.

    Attributes:
        kinematics (KinematicsConfig): Lie-group tolerances
        dynamics (DynamicsConfig): Dynamics settings
        dh (DHConfig): Traditional pipeline settings
        simulation (SimulationConfig): Simulation defaults
        benchmark (BenchmarkConfig): Benchmark defaults
        output (OutputConfig): Output formatting
    """

    kinematics: KinematicsConfig = field(default_factory=KinematicsConfig)
    dynamics: DynamicsConfig = field(default_factory=DynamicsConfig)
    dh: DHConfig = field(default_factory=DHConfig)
    simulation: SimulationConfig = field(default_factory=SimulationConfig)
    benchmark: BenchmarkConfig = field(default_factory=BenchmarkConfig)
    output: OutputConfig = field(default_factory=OutputConfig)


# Global configuration instance
# Import this in your modules: from poe_robotics.config import CONFIG
CONFIG = AppConfig()
