import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from orbitkit import build_root_system, default_order, parse_series


@pytest.fixture(scope="session")
def a1():
    return build_root_system(parse_series("A1"))


@pytest.fixture(scope="session")
def a2():
    return build_root_system(parse_series("A2"))


@pytest.fixture(scope="session")
def b2():
    return build_root_system(parse_series("B2"))


@pytest.fixture(scope="session")
def a2_order(a2):
    return default_order(a2)
