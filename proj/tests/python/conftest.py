import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture
def data():
    return ROOT / "data"


@pytest.fixture
def carla(data):
    return data / "carla"
