"""
Shared fixtures for the poe_robotics test suite.
"""

import numpy as np
import pytest

from poe_robotics.robots import make_cartpole, make_franka, make_snake


@pytest.fixture
def rng():
    return np.random.default_rng(20240521)


@pytest.fixture
def snake1():
    return make_snake(1)


@pytest.fixture
def snake2():
    return make_snake(2)


@pytest.fixture
def cartpole():
    return make_cartpole()


@pytest.fixture(scope="session")
def franka():
    return make_franka()


def random_transform(rng):
    """Random rigid transform built from a random unit axis and angle."""
    from poe_robotics.se3_core import Transform, rotation_exp

    axis = rng.normal(size=3)
    axis /= np.linalg.norm(axis)
    return Transform(rotation_exp(axis, rng.uniform(-np.pi, np.pi)), rng.uniform(-2.0, 2.0, 3))


def central_difference(function, q, h=1e-6):
    """Column k is (f(q + h e_k) - f(q - h e_k)) / 2h for a vector-valued f."""
    q = np.asarray(q, dtype=float)
    columns = []
    for k in range(q.size):
        step = np.zeros_like(q)
        step[k] = h
        columns.append((np.asarray(function(q + step)) - np.asarray(function(q - step))) / (2.0 * h))
    return np.stack(columns, axis=-1)
