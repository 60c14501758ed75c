"""Shared test fixtures for disk-criterion tests."""

import pytest

from disk_criterion.cubical import CubicalSet
from disk_criterion.shapefile import parse_shape
from tests.helpers import SHAPES


@pytest.fixture
def shape():
    """Factory for named test shapes."""

    def _shape(name: str) -> CubicalSet:
        return parse_shape(SHAPES[name])

    return _shape


@pytest.fixture
def lone_square() -> CubicalSet:
    return parse_shape(SHAPES["lone_square"])


@pytest.fixture
def block3() -> CubicalSet:
    return parse_shape(SHAPES["block3"])


@pytest.fixture
def annulus() -> CubicalSet:
    return parse_shape(SHAPES["annulus"])


@pytest.fixture
def shape_file(tmp_path):
    """Write a named shape to a ShapeFile and return its path."""

    def _write(name: str) -> object:
        path = tmp_path / f"{name}.shape"
        path.write_text(SHAPES[name])
        return path

    return _write


@pytest.fixture
def temp_output_dir(tmp_path):
    """Temporary directory for test outputs."""
    output_dir = tmp_path / "output"
    output_dir.mkdir()
    return output_dir
