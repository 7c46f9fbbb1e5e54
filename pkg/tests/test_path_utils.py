"""
Tests for the path helpers.
"""

from pathlib import Path

from poe_robotics.utils.path_utils import ensure_directory, get_script_directory, open_output, resolve_path


def test_script_directory_is_the_package():
    assert (get_script_directory() / "robots" / "descriptions" / "franka.json").is_file()


def test_resolve_relative_to_package():
    assert resolve_path("robots/descriptions/franka.json") == get_script_directory() / "robots" / "descriptions" / "franka.json"


def test_resolve_absolute(tmp_path):
    assert resolve_path(tmp_path / "x.json", base_dir=Path("/elsewhere")) == (tmp_path / "x.json").resolve()


def test_ensure_directory(tmp_path):
    target = tmp_path / "a" / "b"
    assert ensure_directory(target) == target
    assert target.is_dir()


def test_open_output_file(tmp_path):
    target = tmp_path / "nested" / "out.csv"
    with open_output(target) as handle:
        handle.write("t,q1\n")
    assert target.read_text(encoding="utf-8") == "t,q1\n"


def test_open_output_stdout(capsys):
    with open_output("-") as handle:
        handle.write("header\n")
    assert capsys.readouterr().out == "header\n"
