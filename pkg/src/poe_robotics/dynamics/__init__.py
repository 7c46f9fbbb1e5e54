"""
Geometric rigid-body dynamics package.
"""

from .dynamics import (
    PARTIALS_METHODS,
    christoffel_coriolis,
    coriolis_matrix,
    forward_dynamics,
    gravity_vector,
    inverse_dynamics,
    kinetic_energy,
    mass_matrix,
    mass_matrix_partials,
    potential_energy,
    solve_mass_system,
)

__all__ = [
    "PARTIALS_METHODS",
    "christoffel_coriolis",
    "coriolis_matrix",
    "forward_dynamics",
    "gravity_vector",
    "inverse_dynamics",
    "kinetic_energy",
    "mass_matrix",
    "mass_matrix_partials",
    "potential_energy",
    "solve_mass_system",
]
