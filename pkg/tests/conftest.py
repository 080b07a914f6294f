import sys
from importlib import resources
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gmd.parsing import load_ideal_file  # noqa: E402
from gmd.points import load_points, vanishing_ideal  # noqa: E402


def data_path(name: str) -> Path:
    return Path(str(resources.files("gmd") / "data" / name))


@pytest.fixture(scope="session")
def determinantal():
    return load_ideal_file(data_path("determinantal.ideal")).ideal()


@pytest.fixture(scope="session")
def monomial_example():
    return load_ideal_file(data_path("monomial.ideal")).ideal()


@pytest.fixture(scope="session")
def q_example():
    return load_ideal_file(data_path("q_example.ideal")).ideal()


@pytest.fixture(scope="session")
def ten_points():
    return load_points(data_path("ten_points.points"))


@pytest.fixture(scope="session")
def ten_points_ideal(ten_points):
    return vanishing_ideal(ten_points)
