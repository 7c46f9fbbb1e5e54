"""
Tests for loading and saving robot description documents.
"""

import copy
import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from poe_robotics.errors import DescriptionError
from poe_robotics.robot_model import (
    JointKind,
    load_robot,
    load_robot_file,
    make_revolute_twist,
    robot_document,
    save_robot,
)
from poe_robotics.robots import make_cartpole, make_snake
from poe_robotics.robots.zoo import shipped_description_path

MINIMAL = {
    "name": "pendulum",
    "gravity": [0.0, -9.81, 0.0],
    "joints": [{"type": "revolute", "axis": [0.0, 0.0, 1.0], "origin": [0.0, 0.5, 0.0]}],
    "bodies": [{"mass": 1.0, "com": [0.5, 0.5, 0.0], "inertia": [0.0, 0.1, 0.1, 0.0, 0.0, 0.0]}],
    "ee_home": {"position": [1.0, 0.5, 0.0]},
}


def _document(**changes):
    document = copy.deepcopy(MINIMAL)
    document.update(changes)
    return document


def _load(document):
    return load_robot(json.dumps(document))


def _field_path(document):
    with pytest.raises(DescriptionError) as info:
        _load(document)
    return info.value.field_path


class TestLoadRobot:
    def test_minimal_document(self):
        model = _load(MINIMAL)
        assert model.dof == 1
        assert model.name == "pendulum"
        assert model.joint_twists[0].isclose(make_revolute_twist((0, 0, 1), (0, 0.5, 0)))
        assert_allclose(model.bodies[0].inertia, np.diag([0.0, 0.1, 0.1]))

    def test_defaults(self):
        document = _document()
        del document["gravity"]
        model = _load(document)
        assert_allclose(model.gravity, [0, 0, -9.81])
        assert_allclose(model.ee_home.rotation, np.eye(3))
        assert_allclose(model.bodies[0].com_home.rotation, np.eye(3))

    def test_prismatic_origin_optional(self):
        document = _document(joints=[{"type": "prismatic", "axis": [1.0, 0.0, 0.0]}])
        model = _load(document)
        assert model.joint_kinds == (JointKind.PRISMATIC,)

    def test_full_inertia_matrix(self):
        document = _document()
        document["bodies"][0]["inertia"] = [1, 0, 0, 0, 1, 0, 0, 0, 1]
        assert_allclose(_load(document).bodies[0].inertia, np.eye(3))

    def test_shipped_snake_matches_constructor(self):
        model = load_robot_file(shipped_description_path("snake_n"))
        assert model.isclose(make_snake(2, 1.0, 1.0), 0.0)


class TestValidationErrors:
    def test_negative_mass_names_the_body(self):
        document = _document()
        document["bodies"][0]["mass"] = -1
        assert _field_path(document) == "bodies[0].mass"

    def test_non_unit_axis(self):
        document = _document()
        document["joints"][0]["axis"] = [0.0, 0.0, 2.0]
        assert _field_path(document) == "joints[0].axis"

    def test_non_symmetric_inertia(self):
        document = _document()
        document["bodies"][0]["inertia"] = [1, 0.5, 0, 0, 1, 0, 0, 0, 1]
        assert _field_path(document) == "bodies[0].inertia"

    def test_unknown_top_level_key(self):
        assert _field_path(_document(colour="red")) == "colour"

    def test_unknown_body_key(self):
        document = _document()
        document["bodies"][0]["friction"] = 0.1
        assert _field_path(document) == "bodies[0].friction"

    def test_missing_key(self):
        document = _document()
        del document["ee_home"]
        assert _field_path(document) == "ee_home"

    def test_unknown_joint_type(self):
        document = _document()
        document["joints"][0]["type"] = "spherical"
        assert _field_path(document) == "joints[0].type"

    def test_body_count_mismatch(self):
        document = _document()
        document["bodies"] = document["bodies"] * 2
        assert _field_path(document) == "bodies"

    def test_bad_rotation(self):
        document = _document()
        document["ee_home"]["rotation"] = [1, 0, 0, 0, 1, 0, 0, 0, -1]
        assert _field_path(document) == "ee_home.rotation"

    def test_wrong_vector_length(self):
        document = _document()
        document["bodies"][0]["com"] = [0.5, 0.5]
        assert _field_path(document) == "bodies[0].com"

    def test_boolean_is_not_a_number(self):
        document = _document()
        document["bodies"][0]["mass"] = True
        assert _field_path(document) == "bodies[0].mass"

    def test_invalid_json(self):
        with pytest.raises(DescriptionError, match="invalid JSON"):
            load_robot("{not json")

    def test_error_is_a_value_error(self):
        with pytest.raises(ValueError):
            load_robot("[]")


class TestSaveRobot:
    @pytest.mark.parametrize("factory", [lambda: make_snake(4, 0.7, 2.5), make_cartpole])
    def test_round_trip(self, factory):
        model = factory()
        assert load_robot(save_robot(model)).isclose(model, 1e-12)

    def test_round_trip_franka(self, franka):
        again = load_robot(save_robot(franka))
        assert again.isclose(franka, 1e-12)
        assert again.name == franka.name

    def test_identity_rotations_are_omitted(self, snake2):
        document = robot_document(snake2)
        assert "rotation" not in document["ee_home"]
        assert all("com_rotation" not in body for body in document["bodies"])
