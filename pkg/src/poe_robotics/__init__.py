"""
poe_robotics Package

Screw-theory modeling of open-chain robots: forward kinematics and
Jacobians from the product of exponentials, rigid-body dynamics from
generalized inertias, and a traditional modified Denavit-Hartenberg
pipeline that serves as reference and benchmark counterpart.

Key Features:
- Immutable robot models built in code or from JSON description documents
- Spatial, body and hybrid Jacobians of any point on any body
- Mass matrix, gravity vector and Christoffel Coriolis matrix
- Robot zoo: planar snake, cart-pole and the Franka arm
- Fixed-step simulation with a gravity-compensated impedance controller
- DOF-scaling benchmark with CSV output, scaling fits and SVG chart

Package Structure:
- se3_core: Rigid transforms, twists, exponential map and adjoints
- robot_model: Robot description types and description documents
- kinematics_poe: Product-of-exponentials kinematics
- dynamics: Mass matrix, gravity, Coriolis and forward dynamics
- dh_baseline: Modified-DH reference pipeline
- robots: Zoo constructors and shipped descriptions
- sim: Integration loop and impedance control
- bench: Timing harness and reports
- config: Toolkit configuration and app config loader
- logging_utils: Centralized logging configuration
- utils: Path utilities
- main: Command-line interface

Usage:
    from poe_robotics.robots import make_snake
    from poe_robotics.kinematics_poe import forward_kinematics
    from poe_robotics.dynamics import mass_matrix

    robot = make_snake(2)
    print(forward_kinematics(robot, [1.5708, -1.5708]).translation)
    print(mass_matrix(robot, [0.0, 0.0]))
"""

__version__ = "1.0.0"
__description__ = "Screw-theory robot kinematics and dynamics toolkit"
