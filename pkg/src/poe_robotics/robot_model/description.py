"""
Robot description documents.

A description is a UTF-8 JSON document:

    { "name": str, "gravity": [gx, gy, gz],
      "joints": [ {"type": "revolute"|"prismatic", "axis": [x,y,z], "origin": [x,y,z]}, ... ],
      "bodies": [ {"mass": m, "com": [x,y,z], "com_rotation": 9 row-major reals (optional),
                   "inertia": [Ixx,Iyy,Izz,Ixy,Ixz,Iyz] or 9 row-major reals}, ... ],
      "ee_home": {"position": [x,y,z], "rotation": 9 row-major reals (optional)} }

Units are meters, kilograms and kg m^2. "gravity" defaults to (0, 0, -9.81);
"origin" may be omitted for prismatic joints. Unknown keys are rejected and
every validation failure names the offending field path.
"""

import json
import math
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

import numpy as np

from poe_robotics.errors import DescriptionError, InvalidRotationError
from poe_robotics.logging_utils.logging_config import get_logger
from poe_robotics.robot_model.model import (
    BodySpec,
    JointKind,
    JointSpec,
    RobotModel,
    inertia_problems,
)
from poe_robotics.se3_core import Transform, check_rotation

logger = get_logger("poe_robotics.robot_model")

ROTATION_TOLERANCE = 1e-9

_TOP_KEYS = {"name", "gravity", "joints", "bodies", "ee_home"}
_JOINT_KEYS = {"type", "axis", "origin"}
_BODY_KEYS = {"mass", "com", "com_rotation", "inertia"}
_EE_KEYS = {"position", "rotation"}


def _require_object(value: Any, path: str, allowed: set, required: Sequence[str]) -> Dict[str, Any]:
    if not isinstance(value, dict):
        raise DescriptionError(path, f"expected an object, got {type(value).__name__}")
    for key in value:
        if key not in allowed:
            raise DescriptionError(f"{path}.{key}" if path else key, "unknown key")
    for key in required:
        if key not in value:
            raise DescriptionError(f"{path}.{key}" if path else key, "missing required key")
    return value


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DescriptionError(path, f"expected a number, got {value!r}")
    if not math.isfinite(value):
        raise DescriptionError(path, "must be finite")
    return float(value)


def _numbers(value: Any, path: str, lengths: Sequence[int]) -> np.ndarray:
    if not isinstance(value, list):
        raise DescriptionError(path, f"expected an array of {lengths[0]} numbers")
    if len(value) not in lengths:
        expected = " or ".join(str(n) for n in lengths)
        raise DescriptionError(path, f"expected {expected} numbers, got {len(value)}")
    return np.array([_number(item, f"{path}[{i}]") for i, item in enumerate(value)])


def _rotation(value: Any, path: str) -> np.ndarray:
    rotation = _numbers(value, path, (9,)).reshape(3, 3)
    try:
        return check_rotation(rotation, ROTATION_TOLERANCE)
    except InvalidRotationError as e:
        raise DescriptionError(path, str(e))


def _unit_axis(value: Any, path: str) -> np.ndarray:
    axis = _numbers(value, path, (3,))
    norm = float(np.linalg.norm(axis))
    if abs(norm - 1.0) > ROTATION_TOLERANCE:
        raise DescriptionError(path, f"axis must have unit norm (got {norm!r})")
    return axis


def _inertia(value: Any, path: str) -> np.ndarray:
    values = _numbers(value, path, (6, 9))
    if values.size == 6:
        ixx, iyy, izz, ixy, ixz, iyz = values
        inertia = np.array([[ixx, ixy, ixz], [ixy, iyy, iyz], [ixz, iyz, izz]])
    else:
        inertia = values.reshape(3, 3)
    problem = inertia_problems(inertia)
    if problem is not None:
        raise DescriptionError(path, problem)
    return inertia


def _parse_joint(value: Any, path: str) -> JointSpec:
    joint = _require_object(value, path, _JOINT_KEYS, ("type", "axis"))
    kind_text = joint["type"]
    if kind_text not in (JointKind.REVOLUTE.value, JointKind.PRISMATIC.value):
        raise DescriptionError(f"{path}.type", f"expected 'revolute' or 'prismatic', got {kind_text!r}")
    kind = JointKind(kind_text)
    axis = _unit_axis(joint["axis"], f"{path}.axis")
    if "origin" in joint:
        origin = _numbers(joint["origin"], f"{path}.origin", (3,))
    elif kind is JointKind.PRISMATIC:
        origin = np.zeros(3)
    else:
        raise DescriptionError(f"{path}.origin", "missing required key for a revolute joint")
    return JointSpec(kind, axis, origin)


def _parse_body(value: Any, path: str) -> BodySpec:
    body = _require_object(value, path, _BODY_KEYS, ("mass", "com", "inertia"))
    mass = _number(body["mass"], f"{path}.mass")
    if mass <= 0.0:
        raise DescriptionError(f"{path}.mass", f"mass must be positive (got {mass!r})")
    com = _numbers(body["com"], f"{path}.com", (3,))
    rotation = _rotation(body["com_rotation"], f"{path}.com_rotation") if "com_rotation" in body else np.eye(3)
    inertia = _inertia(body["inertia"], f"{path}.inertia")
    return BodySpec(mass, Transform(rotation, com), inertia)


def parse_robot_document(document: Any) -> RobotModel:
    """Validate an already-decoded JSON value and build the RobotModel."""
    top = _require_object(document, "", _TOP_KEYS, ("name", "joints", "bodies", "ee_home"))

    name = top["name"]
    if not isinstance(name, str) or not name:
        raise DescriptionError("name", "expected a non-empty string")

    gravity = _numbers(top["gravity"], "gravity", (3,)) if "gravity" in top else np.array([0.0, 0.0, -9.81])

    joints_value = top["joints"]
    if not isinstance(joints_value, list) or not joints_value:
        raise DescriptionError("joints", "expected a non-empty array")
    bodies_value = top["bodies"]
    if not isinstance(bodies_value, list):
        raise DescriptionError("bodies", "expected an array")
    if len(bodies_value) != len(joints_value):
        raise DescriptionError(
            "bodies", f"expected one body per joint ({len(joints_value)}), got {len(bodies_value)}"
        )

    joints = [_parse_joint(value, f"joints[{i}]") for i, value in enumerate(joints_value)]
    bodies = [_parse_body(value, f"bodies[{i}]") for i, value in enumerate(bodies_value)]

    ee = _require_object(top["ee_home"], "ee_home", _EE_KEYS, ("position",))
    ee_position = _numbers(ee["position"], "ee_home.position", (3,))
    ee_rotation = _rotation(ee["rotation"], "ee_home.rotation") if "rotation" in ee else np.eye(3)

    return RobotModel(
        name=name,
        joints=tuple(joints),
        bodies=tuple(bodies),
        ee_home=Transform(ee_rotation, ee_position),
        gravity=gravity,
    )


def load_robot(description: str) -> RobotModel:
    """
    Parse and validate a robot description document.

    Raises:
        DescriptionError: On malformed JSON or any schema/validation failure;
                          ``field_path`` names the offending field.
    """
    try:
        document = json.loads(description)
    except json.JSONDecodeError as e:
        raise DescriptionError("<document>", f"invalid JSON: {e}")
    model = parse_robot_document(document)
    logger.debug(f"Loaded robot '{model.name}' with {model.dof} joints")
    return model


def load_robot_file(path: Union[str, Path]) -> RobotModel:
    """Read a description document from ``path`` and load it."""
    path = Path(path)
    logger.info(f"Loading robot description: {path}")
    return load_robot(path.read_text(encoding="utf-8"))


def _floats(values: np.ndarray) -> List[float]:
    return [float(v) for v in np.asarray(values).reshape(-1)]


def robot_document(model: RobotModel) -> Dict[str, Any]:
    """The JSON-ready description of ``model``."""
    bodies = []
    for body in model.bodies:
        inertia = body.inertia
        entry: Dict[str, Any] = {"mass": float(body.mass), "com": _floats(body.com_home.translation)}
        if not np.array_equal(body.com_home.rotation, np.eye(3)):
            entry["com_rotation"] = _floats(body.com_home.rotation)
        entry["inertia"] = _floats([
            inertia[0, 0], inertia[1, 1], inertia[2, 2], inertia[0, 1], inertia[0, 2], inertia[1, 2],
        ])
        bodies.append(entry)

    ee_home: Dict[str, Any] = {"position": _floats(model.ee_home.translation)}
    if not np.array_equal(model.ee_home.rotation, np.eye(3)):
        ee_home["rotation"] = _floats(model.ee_home.rotation)

    return {
        "name": model.name,
        "gravity": _floats(model.gravity),
        "joints": [
            {"type": joint.kind.value, "axis": _floats(joint.axis), "origin": _floats(joint.origin)}
            for joint in model.joints
        ],
        "bodies": bodies,
        "ee_home": ee_home,
    }


def save_robot(model: RobotModel) -> str:
    """Serialize ``model`` to a description document accepted by :func:`load_robot`."""
    return json.dumps(robot_document(model), indent=2) + "\n"
