"""
Conversion between geodesic lengths and squared chordal distances (float model)
"""

import math
from fractions import Fraction

from errors import DomainError, ModelMismatch


def _as_float(value, name: str) -> float:
    if isinstance(value, Fraction):
        raise ModelMismatch(f"{name} must be a float for trigonometric conversion")
    return float(value)


def chord_from_geodesic(d: float, R: float) -> float:
    """
    x = 2 R^2 (1 - cos(d/R))

    Args:
        d: Geodesic length, nonnegative
        R: Sphere radius

    Returns:
        Squared chordal distance in [0, 4R^2]
    """
    d, R = _as_float(d, "d"), _as_float(R, "R")
    if d < 0:
        raise DomainError(f"Geodesic length must be nonnegative, got {d}")
    return 2 * R * R * (1 - math.cos(d / R))


def geodesic_from_chord(x: float, R: float) -> float:
    """
    Inverse of chord_from_geodesic: R * arccos(1 - x / (2R^2))

    Raises:
        DomainError: If x lies outside [0, 4R^2]
    """
    x, R = _as_float(x, "x"), _as_float(R, "R")
    limit = 4 * R * R
    slack = 1e-12 * limit
    if x < -slack or x > limit + slack:
        raise DomainError(f"Squared chord {x} outside [0, {limit}]")
    cosine = min(1.0, max(-1.0, 1 - x / (2 * R * R)))
    return R * math.acos(cosine)
