"""
Shared fixtures: the radius-7 hexagon and its friezes.
"""

import pytest

from frieze import FriezeKind, frieze_from_polygon

from .hexagon import hexagon_points


@pytest.fixture
def hexagon():
    return hexagon_points()


@pytest.fixture
def hexagon_frieze(hexagon):
    return frieze_from_polygon(hexagon, FriezeKind.HERONIAN)


@pytest.fixture
def hexagon_cm_frieze(hexagon):
    return frieze_from_polygon(hexagon, FriezeKind.CAYLEY_MENGER)
