"""
Tests for product-of-exponentials kinematics.
"""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from conftest import central_difference
from poe_robotics.dh_baseline import dh_forward_kinematics, snake_to_dh
from poe_robotics.errors import BodyIndexError, DimensionError
from poe_robotics.kinematics_poe import (
    JacobianFlavor,
    body_jacobian,
    forward_kinematics,
    hybrid_jacobian,
    spatial_jacobian,
    spatial_velocity,
    update_kinematics,
)
from poe_robotics.robots import make_snake
from poe_robotics.se3_core import adjoint, compose, inverse_adjoint, vee

HALF_PI = np.pi / 2


class TestForwardKinematics:
    def test_home(self, snake2):
        H = forward_kinematics(snake2, [0.0, 0.0])
        assert_allclose(H.translation, [2, 0, 0])
        assert_allclose(H.rotation, np.eye(3))

    def test_elbow(self, snake2):
        H = forward_kinematics(snake2, [HALF_PI, -HALF_PI])
        assert_allclose(H.translation, [1, 1, 0], atol=1e-12)
        assert_allclose(H.rotation, np.eye(3), atol=1e-12)

    def test_franka_home(self, franka):
        H = forward_kinematics(franka, np.zeros(7))
        assert_allclose(H.translation, [0.088, 0, 1.033], atol=1e-12)
        assert_allclose(H.rotation, np.eye(3), atol=1e-12)

    def test_body_and_offset(self, snake2):
        # COM of the first bar, then 0.5 further along it: the elbow
        com = forward_kinematics(snake2, [HALF_PI, 0.3], body_id=1)
        assert_allclose(com.translation, [0, 0.5, 0], atol=1e-12)
        elbow = forward_kinematics(snake2, [HALF_PI, 0.3], body_id=1, offset=[0.5, 0, 0])
        assert_allclose(elbow.translation, [0, 1, 0], atol=1e-12)

    def test_shared_state(self, snake2):
        state = update_kinematics(snake2, [0.4, -0.2])
        assert forward_kinematics(snake2, state).isclose(forward_kinematics(snake2, [0.4, -0.2]), 0.0)

    @pytest.mark.parametrize("body_id", [0, 3, 1.5])
    def test_body_out_of_range(self, snake2, body_id):
        with pytest.raises(BodyIndexError):
            forward_kinematics(snake2, [0.0, 0.0], body_id=body_id)

    def test_integral_float_body_id(self, snake2):
        q = [0.4, -0.2]
        assert forward_kinematics(snake2, q, body_id=1.0).isclose(forward_kinematics(snake2, q, body_id=1), 0.0)
        assert_allclose(hybrid_jacobian(snake2, q, body_id=2.0).matrix, hybrid_jacobian(snake2, q, body_id=2).matrix)
        assert hybrid_jacobian(snake2, q, body_id=np.int64(1)).body_id == 1

    def test_wrong_length(self, snake2):
        with pytest.raises(DimensionError):
            forward_kinematics(snake2, [0.0, 0.0, 0.0])

    @pytest.mark.parametrize("n", range(1, 11))
    def test_matches_dh_for_snakes(self, rng, n):
        model, dh = make_snake(n), snake_to_dh(n)
        for _ in range(100):
            q = rng.uniform(-np.pi, np.pi, n)
            poe = forward_kinematics(model, q)
            ref = dh_forward_kinematics(dh, q)
            assert np.linalg.norm(poe.rotation - ref.rotation) <= 1e-10
            assert np.linalg.norm(poe.translation - ref.translation) <= 1e-10


class TestSpatialJacobian:
    def test_home_columns_are_twists(self, snake2):
        J = spatial_jacobian(snake2, [0.0, 0.0])
        assert J.flavor is JacobianFlavor.SPATIAL
        assert_allclose(J.matrix[:, 0], [0, 0, 0, 0, 0, 1], atol=1e-15)
        assert_allclose(J.matrix[:, 1], [0, -1, 0, 0, 0, 1], atol=1e-15)

    def test_rotated_second_column(self, snake2):
        J = spatial_jacobian(snake2, [HALF_PI, 0.0])
        assert_allclose(J.matrix[:, 1], [1, 0, 0, 0, 0, 1], atol=1e-12)

    def test_first_column_constant(self, franka, rng):
        first = spatial_jacobian(franka, np.zeros(7)).matrix[:, 0]
        for _ in range(10):
            J = spatial_jacobian(franka, rng.uniform(-2, 2, 7))
            assert_allclose(J.matrix[:, 0], first, atol=1e-15)


class TestBodyJacobian:
    def test_pendulum_is_configuration_independent(self, snake1, rng):
        for _ in range(100):
            J = body_jacobian(snake1, rng.uniform(-np.pi, np.pi, 1), body_id=1)
            assert_allclose(J.matrix[:, 0], [0, 0.5, 0, 0, 0, 1], atol=1e-12)

    def test_zero_columns_are_exact(self, rng):
        model = make_snake(3)
        J = body_jacobian(model, rng.uniform(-1, 1, 3), body_id=1)
        assert J.flavor is JacobianFlavor.BODY
        assert np.all(J.matrix[:, 1:] == 0.0)

    def test_home_relation_to_spatial(self, franka):
        q = np.zeros(7)
        Js = spatial_jacobian(franka, q).matrix
        for body_id in range(1, 8):
            Jb = body_jacobian(franka, q, body_id).matrix
            expected = inverse_adjoint(franka.com_home_list[body_id - 1]) @ Js[:, :body_id]
            assert_allclose(Jb[:, :body_id], expected, atol=1e-12)

    def test_twist_frame_relation(self, franka, rng):
        for _ in range(20):
            q = rng.uniform(-2, 2, 7)
            qdot = rng.uniform(-1, 1, 7)
            state = update_kinematics(franka, q)
            H_SB = compose(state.partial_products[7], franka.com_home_list[6])
            spatial_twist = spatial_jacobian(franka, q).matrix @ qdot
            body_twist = body_jacobian(franka, q, 7).matrix @ qdot
            assert_allclose(spatial_twist, adjoint(H_SB) @ body_twist, atol=1e-10)


class TestHybridJacobian:
    def test_pendulum_home(self, snake1):
        J = hybrid_jacobian(snake1, [0.0])
        assert J.flavor is JacobianFlavor.HYBRID
        assert_allclose(J.matrix[:, 0], [0, 1, 0, 0, 0, 1], atol=1e-15)

    def test_pendulum_top(self, snake1):
        assert_allclose(hybrid_jacobian(snake1, [HALF_PI]).linear[:, 0], [-1, 0, 0], atol=1e-12)

    def test_matches_finite_difference(self, snake2, rng):
        for _ in range(10):
            q = rng.uniform(-np.pi, np.pi, 2)
            numeric = central_difference(lambda x: forward_kinematics(snake2, x).translation, q)
            assert_allclose(hybrid_jacobian(snake2, q).linear, numeric, atol=1e-6)

    def test_point_jacobian_matches_finite_difference(self, franka, rng):
        q = rng.uniform(-2, 2, 7)
        offset = [-0.1, 0.0, 0.02]
        numeric = central_difference(
            lambda x: forward_kinematics(franka, x, body_id=4, offset=offset).translation, q
        )
        J = hybrid_jacobian(franka, q, body_id=4, offset=offset)
        assert_allclose(J.linear, numeric, atol=1e-6)
        assert np.all(J.matrix[:, 4:] == 0.0)

    def test_angular_block_matches_rotation_rate(self, franka, rng):
        h = 1e-6
        for _ in range(5):
            q = rng.uniform(-2, 2, 7)
            qdot = rng.uniform(-1, 1, 7)
            R = forward_kinematics(franka, q).rotation
            R_dot = (forward_kinematics(franka, q + h * qdot).rotation
                     - forward_kinematics(franka, q - h * qdot).rotation) / (2 * h)
            omega = vee(R_dot @ R.T)
            assert_allclose(hybrid_jacobian(franka, q).angular @ qdot, omega, atol=1e-5)


class TestSpatialVelocity:
    def test_zero_rates(self, snake2):
        v = spatial_velocity(hybrid_jacobian(snake2, [0.3, 0.4]), [0.0, 0.0])
        assert_allclose(v.linear, 0.0)
        assert_allclose(v.angular, 0.0)

    def test_pendulum(self, snake1):
        v = spatial_velocity(hybrid_jacobian(snake1, [0.0]), [1.0])
        assert_allclose(v.linear, [0, 1, 0], atol=1e-15)
        assert_allclose(v.angular, [0, 0, 1])

    def test_two_links(self, snake2):
        v = spatial_velocity(hybrid_jacobian(snake2, [0.0, 0.0]), [1.0, 1.0])
        assert_allclose(v.linear, [0, 3, 0], atol=1e-15)
        assert_allclose(v.angular, [0, 0, 2])

    def test_dimension_mismatch(self, snake2):
        with pytest.raises(DimensionError):
            spatial_velocity(hybrid_jacobian(snake2, [0.0, 0.0]), [1.0])
