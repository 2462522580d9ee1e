"""
The radius-7 hexagon used throughout the tests, and values read off its friezes.
"""

from fractions import Fraction

from geometry import SphereConfig, SpherePoint

HEXAGON = [(7, 0, 0), (2, 3, 6), (3, 6, -2), (6, -2, 3), (-2, -3, 6), (-3, 2, 6)]
HEXAGON_K = Fraction(1, 49)

# (a, b, c, d, e, f, p, q, r, s) of the quadrilateral A1A2A3A4
HEXAGON_DIAMOND = (14, 70, 74, 98, 56, 50, -84, 28, 42, -82)

# squared distances x_uv, u < v
HEXAGON_X = {
    (1, 2): 70, (1, 3): 56, (1, 4): 14, (1, 5): 126, (1, 6): 140,
    (2, 3): 74, (2, 4): 50, (2, 5): 52, (2, 6): 26,
    (3, 4): 98, (3, 5): 170, (3, 6): 116,
    (4, 5): 74, (4, 6): 106,
    (5, 6): 26,
}

HEXAGON_MIDPOINTS = [
    -84, 42, -82, 12, Fraction(-312, 7), Fraction(-528, 7), 28, -36, 80, -96,
    Fraction(-200, 7), Fraction(376, 7), Fraction(72, 7), Fraction(-414, 7), -62, -6, -60, 72,
]


def hexagon_points():
    config = SphereConfig.from_radius(Fraction(7))
    return [SpherePoint.from_coordinates(*map(Fraction, v), config) for v in HEXAGON]


def hexagon_payload() -> dict:
    return {
        "radius": "7",
        "points": [{"x": x, "y": y, "z": z} for x, y, z in HEXAGON],
    }
