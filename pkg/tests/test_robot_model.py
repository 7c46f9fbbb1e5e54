"""
Tests for joint twists, generalized inertias and serial composition.
"""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from poe_robotics.errors import DimensionError, InvalidAxisError, InvalidRotationError
from poe_robotics.kinematics_poe import forward_kinematics
from poe_robotics.robot_model import (
    BodySpec,
    JointKind,
    JointSpec,
    JointState,
    RobotModel,
    attach_serial,
    generalized_inertia,
    make_prismatic_twist,
    make_revolute_twist,
)
from poe_robotics.robots import make_cartpole, make_snake
from poe_robotics.se3_core import Transform, exp_twist


class TestRevoluteTwist:
    def test_point_on_axis(self):
        eta = make_revolute_twist((0, 0, 1), (0, 0, 5))
        assert_allclose(eta.linear, [0, 0, 0], atol=1e-15)
        assert_allclose(eta.angular, [0, 0, 1])

    def test_offset_axis(self):
        eta = make_revolute_twist((0, 0, 1), (1, 0, 0))
        assert_allclose(eta.linear, [0, -1, 0])
        assert_allclose(eta.angular, [0, 0, 1])

    def test_shift_along_axis(self):
        assert make_revolute_twist((0, 0, 1), (1, 0, 0)).isclose(make_revolute_twist((0, 0, 1), (1, 0, 7)))

    def test_point_independence_random(self, rng):
        for _ in range(1000):
            axis = rng.normal(size=3)
            axis /= np.linalg.norm(axis)
            point = rng.uniform(-5, 5, 3)
            shifted = point + rng.uniform(-10, 10) * axis
            a = make_revolute_twist(axis, point)
            b = make_revolute_twist(axis, shifted)
            assert_allclose(a.vector(), b.vector(), atol=1e-12)

    def test_non_unit_axis(self):
        with pytest.raises(InvalidAxisError):
            make_revolute_twist((0, 0, 2), (0, 0, 0))


class TestPrismaticTwist:
    @pytest.mark.parametrize("axis", [(1, 0, 0), (0, 0, 1)])
    def test_unit_axes(self, axis):
        eta = make_prismatic_twist(axis)
        assert_allclose(eta.linear, axis)
        assert_allclose(eta.angular, [0, 0, 0])

    def test_exponential_translates(self):
        H = exp_twist(make_prismatic_twist((1, 0, 0)), 3.0)
        assert_allclose(H.rotation, np.eye(3))
        assert_allclose(H.translation, [3, 0, 0])

    def test_non_unit_axis(self):
        with pytest.raises(InvalidAxisError):
            make_prismatic_twist((1, 1, 0))


class TestGeneralizedInertia:
    def _body(self, mass, inertia):
        return BodySpec(mass, Transform.identity(), inertia)

    def test_unit_body(self):
        assert_allclose(generalized_inertia(self._body(1.0, np.eye(3))), np.eye(6))

    def test_block_assembly(self):
        G = generalized_inertia(self._body(2.0, np.diag([1.0, 2.0, 3.0])))
        assert_allclose(G, np.diag([2, 2, 2, 1, 2, 3]))

    def test_uniform_bar(self):
        # midpoint rule for the integral of x^2 dm over [-1/2, 1/2]
        samples = 10000
        x = (np.arange(samples) + 0.5) / samples - 0.5
        izz = float(np.sum(x ** 2)) / samples
        G = generalized_inertia(self._body(1.0, np.diag([0.0, izz, izz])))
        assert_allclose(G[:3, :3], np.eye(3))
        assert G[5, 5] == pytest.approx(1.0 / 12.0, abs=1e-9)

    def test_rejects_non_symmetric_inertia(self):
        with pytest.raises(ValueError, match="symmetric"):
            self._body(1.0, [[1, 0.5, 0], [0, 1, 0], [0, 0, 1]])

    def test_rejects_triangle_violation(self):
        with pytest.raises(ValueError, match="triangle"):
            self._body(1.0, np.diag([0.1, 0.1, 1.0]))

    def test_rejects_negative_mass(self):
        with pytest.raises(ValueError):
            self._body(-1.0, np.eye(3))


class TestRobotModel:
    def test_twists_are_cached(self, snake2):
        assert len(snake2.joint_twists) == 2
        assert snake2.joint_twists[1].isclose(make_revolute_twist((0, 0, 1), (1, 0, 0)))

    def test_joint_body_count_mismatch(self):
        joint = JointSpec(JointKind.REVOLUTE, (0, 0, 1))
        with pytest.raises(DimensionError):
            RobotModel("bad", (joint,), ())

    def test_home_poses_must_be_rotations(self, snake2):
        reflection = Transform(np.diag([1.0, 1.0, -1.0]), np.zeros(3))
        with pytest.raises(InvalidRotationError):
            RobotModel("mirrored", snake2.joints, snake2.bodies, ee_home=reflection)
        with pytest.raises(InvalidRotationError):
            BodySpec(1.0, reflection, np.eye(3))

    def test_model_is_immutable(self, snake2):
        with pytest.raises(AttributeError):
            snake2.name = "other"
        with pytest.raises(ValueError):
            snake2.gravity[1] = 0.0

    def test_joint_state_lengths(self, snake2):
        state = JointState.for_model(snake2, [0.1, 0.2])
        assert_allclose(state.qdot, [0, 0])
        with pytest.raises(DimensionError):
            JointState.for_model(snake2, [0.1, 0.2, 0.3])


class TestAttachSerial:
    def test_two_snakes_make_a_longer_snake(self, rng):
        combined = attach_serial(make_snake(2), make_snake(3), Transform.identity())
        five = make_snake(5)
        assert combined.dof == 5
        for _ in range(100):
            q = rng.uniform(-np.pi, np.pi, 5)
            assert forward_kinematics(combined, q).isclose(forward_kinematics(five, q), 1e-12)

    def test_combined_model_matches_field_by_field(self):
        combined = attach_serial(make_snake(2), make_snake(3), Transform.identity())
        assert combined.isclose(make_snake(5), 1e-12)

    def test_empty_appendage_shifts_end_effector(self, snake2):
        empty = RobotModel("empty", (), (), ee_home=Transform.identity())
        mount = Transform.from_translation((0.0, 0.5, 0.0))
        combined = attach_serial(snake2, empty, mount)
        assert combined.dof == snake2.dof
        assert_allclose(combined.ee_home.translation, [2.0, 0.5, 0.0])
        for a, b in zip(combined.joint_twists, snake2.joint_twists):
            assert a.isclose(b)

    def test_cartpole_with_snake(self):
        combined = attach_serial(make_cartpole(), make_snake(2), Transform.identity())
        assert combined.dof == 4
        assert combined.joint_kinds == (
            JointKind.PRISMATIC,
            JointKind.REVOLUTE,
            JointKind.REVOLUTE,
            JointKind.REVOLUTE,
        )

    def test_rotated_mount(self):
        # Rotating the appendage by pi/2 about z at the tip of snake(1)
        mount = Transform.from_rotation([[0, -1, 0], [1, 0, 0], [0, 0, 1]])
        combined = attach_serial(make_snake(1), make_snake(1), mount)
        assert_allclose(combined.joints[1].origin, [1, 0, 0])
        assert_allclose(forward_kinematics(combined, [0.0, 0.0]).translation, [1, 1, 0], atol=1e-12)

    def test_associativity(self, rng):
        a, b, c = make_snake(1), make_cartpole(), make_snake(2)
        mount = Transform.from_translation((0.0, 0.0, 0.3))
        left = attach_serial(attach_serial(a, b, mount), c, mount)
        right = attach_serial(a, attach_serial(b, c, mount), mount)
        for _ in range(50):
            q = rng.uniform(-1.5, 1.5, left.dof)
            assert forward_kinematics(left, q).isclose(forward_kinematics(right, q), 1e-10)
