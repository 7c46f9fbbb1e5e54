"""
Tests for the modified-DH reference pipeline and its agreement with the
geometric pipeline.
"""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from poe_robotics.dh_baseline import (
    DHModel,
    DHRow,
    dh_coriolis_matrix,
    dh_forward_kinematics,
    dh_gravity_vector,
    dh_hybrid_jacobian,
    dh_mass_matrix,
    dh_potential_energy,
    dh_transform,
    franka_to_dh,
    snake_to_dh,
)
from poe_robotics.dynamics import coriolis_matrix, gravity_vector, mass_matrix, potential_energy
from poe_robotics.errors import DimensionError
from poe_robotics.kinematics_poe import JacobianFlavor, forward_kinematics, hybrid_jacobian
from poe_robotics.robot_model import BodySpec, JointKind
from poe_robotics.robots import make_snake
from poe_robotics.se3_core import Transform

HALF_PI = np.pi / 2


def _single_row_model(row, tool=None, mass=1.0):
    inertia = np.eye(3) if mass else np.zeros((3, 3))
    body = BodySpec(mass, Transform.identity(), inertia)
    return DHModel("single", (row,), tool or Transform.identity(), (body,))


class TestDHTransform:
    def test_zero_row(self):
        assert dh_transform(DHRow(0.0, 0.0, 0.0), 0.0).isclose(Transform.identity(), 0.0)

    def test_link_length(self):
        H = dh_transform(DHRow(a=1.0, alpha=0.0, d=0.0), 0.0)
        assert_allclose(H.rotation, np.eye(3))
        assert_allclose(H.translation, [1, 0, 0])

    def test_quarter_turn(self):
        H = dh_transform(DHRow(0.0, 0.0, 0.0), HALF_PI)
        assert_allclose(H.rotation, [[0, -1, 0], [1, 0, 0], [0, 0, 1]], atol=1e-15)
        assert_allclose(H.translation, [0, 0, 0])

    def test_home_order(self, rng):
        # Rot_x(alpha) Trans_x(a) Trans_z(d) at theta = 0
        for _ in range(20):
            a, alpha, d = rng.uniform(-1, 1, 3)
            c, s = np.cos(alpha), np.sin(alpha)
            rot_x = np.array([[1, 0, 0], [0, c, -s], [0, s, c]])
            H = dh_transform(DHRow(a, alpha, d), 0.0)
            assert_allclose(H.rotation, rot_x, atol=1e-15)
            assert_allclose(H.translation, [a, 0, 0] + rot_x @ [0, 0, d], atol=1e-15)

    def test_prismatic_adds_to_offset(self):
        H = dh_transform(DHRow(0.0, 0.0, 0.5, kind=JointKind.PRISMATIC), 0.25)
        assert_allclose(H.translation, [0, 0, 0.75])

    def test_non_finite_parameter(self):
        with pytest.raises(ValueError):
            DHRow(float("nan"), 0.0, 0.0)


class TestDHForwardKinematics:
    def test_home(self):
        assert_allclose(dh_forward_kinematics(snake_to_dh(2), [0.0, 0.0]).translation, [2, 0, 0])

    def test_elbow(self):
        H = dh_forward_kinematics(snake_to_dh(2), [HALF_PI, -HALF_PI])
        assert_allclose(H.translation, [1, 1, 0], atol=1e-12)

    def test_half_turn_with_tool(self):
        dh = _single_row_model(DHRow(0.0, 0.0, 0.0), tool=Transform.from_translation((1.0, 0.0, 0.0)))
        assert_allclose(dh_forward_kinematics(dh, [np.pi]).translation, [-1, 0, 0], atol=1e-15)

    def test_wrong_length(self):
        with pytest.raises(DimensionError):
            dh_forward_kinematics(snake_to_dh(2), [0.0])


class TestSnakeToDH:
    def test_structure(self):
        dh = snake_to_dh(1)
        assert dh.dof == 1
        assert dh.rows[0].a == 0.0
        assert_allclose(dh.tool.translation, [1, 0, 0])

    def test_matches_snake(self, rng):
        model, dh = make_snake(5), snake_to_dh(5)
        for _ in range(100):
            q = rng.uniform(-np.pi, np.pi, 5)
            assert dh_forward_kinematics(dh, q).isclose(forward_kinematics(model, q), 1e-10)

    @pytest.mark.parametrize("n", [0, -1, 2.5])
    def test_invalid_length(self, n):
        with pytest.raises(ValueError):
            snake_to_dh(n)


class TestDHJacobian:
    def test_pendulum(self):
        J = dh_hybrid_jacobian(snake_to_dh(1), [0.0])
        assert J.flavor is JacobianFlavor.HYBRID
        assert_allclose(J.matrix[:, 0], [0, 1, 0, 0, 0, 1], atol=1e-7)

    def test_prismatic_column(self):
        dh = _single_row_model(DHRow(0.0, 0.0, 0.0, kind=JointKind.PRISMATIC))
        J = dh_hybrid_jacobian(dh, [0.3])
        assert_allclose(J.matrix[:, 0], [0, 0, 1, 0, 0, 0], atol=1e-7)

    @pytest.mark.parametrize("linear", ["finite_difference", "cross_product"])
    def test_matches_geometric(self, rng, linear):
        model, dh = make_snake(3), snake_to_dh(3)
        for _ in range(20):
            q = rng.uniform(-np.pi, np.pi, 3)
            assert_allclose(dh_hybrid_jacobian(dh, q, linear=linear).matrix, hybrid_jacobian(model, q).matrix, atol=1e-5)

    def test_unknown_mode(self):
        with pytest.raises(ValueError, match="linear Jacobian mode"):
            dh_hybrid_jacobian(snake_to_dh(2), [0.0, 0.0], linear="symbolic")


class TestDHDynamics:
    def test_pendulum_mass(self):
        assert_allclose(dh_mass_matrix(snake_to_dh(1), [0.4]), [[1 / 3]], rtol=1e-12)

    def test_two_link_mass(self):
        assert_allclose(dh_mass_matrix(snake_to_dh(2), [1.1, 0.0]), [[8 / 3, 5 / 6], [5 / 6, 1 / 3]], rtol=1e-12)

    def test_massless_body(self):
        dh = _single_row_model(DHRow(0.0, 0.0, 0.0), mass=0.0)
        assert_allclose(dh_mass_matrix(dh, [0.2]), [[0.0]])

    def test_gravity_and_potential(self):
        dh = snake_to_dh(1)
        assert_allclose(dh_gravity_vector(dh, [0.0]), [4.905], rtol=1e-12)
        assert dh_potential_energy(dh, [HALF_PI]) == pytest.approx(4.905, rel=1e-12)

    def test_coriolis(self):
        C = dh_coriolis_matrix(snake_to_dh(2), [0.0, HALF_PI], [1.0, 1.0])
        assert_allclose(C, [[-0.5, -1.0], [0.5, 0.0]], atol=1e-6)


class TestCrossMethodEquivalence:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_snake(self, rng, n):
        model, dh = make_snake(n), snake_to_dh(n)
        for _ in range(100):
            q = rng.uniform(-np.pi, np.pi, n)
            assert dh_forward_kinematics(dh, q).isclose(forward_kinematics(model, q), 1e-10)
            assert_allclose(dh_mass_matrix(dh, q), mass_matrix(model, q), atol=1e-9)
        for _ in range(10):
            q = rng.uniform(-np.pi, np.pi, n)
            assert_allclose(dh_hybrid_jacobian(dh, q).matrix, hybrid_jacobian(model, q).matrix, atol=1e-5)
            assert_allclose(dh_gravity_vector(dh, q), gravity_vector(model, q), atol=1e-9)

    def test_franka_home(self, franka):
        dh = franka_to_dh()
        H = dh_forward_kinematics(dh, np.zeros(7))
        assert_allclose(H.translation, [0.088, 0, 1.033], atol=1e-12)
        assert_allclose(H.rotation, np.eye(3), atol=1e-12)

    def test_franka(self, franka, rng):
        dh = franka_to_dh()
        for _ in range(20):
            q = rng.uniform(-2, 2, 7)
            assert dh_forward_kinematics(dh, q).isclose(forward_kinematics(franka, q), 1e-10)
            assert_allclose(dh_hybrid_jacobian(dh, q).matrix, hybrid_jacobian(franka, q).matrix, atol=1e-5)
            assert_allclose(dh_mass_matrix(dh, q), mass_matrix(franka, q), atol=1e-9)
            assert dh_potential_energy(dh, q) == pytest.approx(potential_energy(franka, q), abs=1e-9)

    def test_franka_coriolis(self, franka, rng):
        dh = franka_to_dh()
        q = rng.uniform(-2, 2, 7)
        qdot = rng.uniform(-1, 1, 7)
        assert_allclose(dh_coriolis_matrix(dh, q, qdot), coriolis_matrix(franka, q, qdot), atol=1e-6)
