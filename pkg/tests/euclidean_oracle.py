"""
Planar geometry from coordinates, used only as a test oracle for K = 0.

Nothing here calls into the library: squared distances and signed
measurements come straight from integer coordinates.
"""

import random
from fractions import Fraction
from typing import Dict, List, Tuple

Point = Tuple[int, int]


def random_planar_polygon(seed: int, n: int, spread: int = 9) -> List[Point]:
    """n distinct integer points, no three on a line."""
    rng = random.Random(seed)
    points: List[Point] = []
    while len(points) < n:
        candidate = (rng.randint(-spread, spread), rng.randint(-spread, spread))
        if candidate in points:
            continue
        if any(cross(u, v, candidate) == 0 for k, u in enumerate(points) for v in points[k + 1 :]):
            continue
        points.append(candidate)
    return points


def sq(u: Point, v: Point) -> Fraction:
    return Fraction((u[0] - v[0]) ** 2 + (u[1] - v[1]) ** 2)


def cross(u: Point, v: Point, w: Point) -> int:
    return (v[0] - u[0]) * (w[1] - u[1]) - (v[1] - u[1]) * (w[0] - u[0])


def signed(u: Point, v: Point, w: Point) -> Fraction:
    """Four times the signed area of uvw."""
    return Fraction(2 * cross(u, v, w))


def quad_values(points: List[Point]) -> Dict[str, Fraction]:
    """Diamond letters of the planar quadrilateral A1A2A3A4."""
    A1, A2, A3, A4 = points
    return {
        "a": sq(A1, A4),
        "b": sq(A1, A2),
        "c": sq(A2, A3),
        "d": sq(A3, A4),
        "e": sq(A1, A3),
        "f": sq(A2, A4),
        "p": signed(A1, A2, A3),
        "q": signed(A1, A3, A4),
        "r": signed(A1, A2, A4),
        "s": signed(A2, A3, A4),
    }


def frieze_value(points: List[Point], I: int, J: int) -> Fraction:
    """Entry at doubled index (I, J) of the planar polygon's frieze."""
    n = len(points)

    def vertex(m: int) -> Point:
        return points[(m - 1) % n]

    if I % 2 == 0 and J % 2 == 0:
        return sq(vertex(I // 2), vertex(J // 2))
    if I % 2:
        i = (I - 1) // 2
        return signed(vertex(i), vertex(i + 1), vertex(J // 2))
    j = (J - 1) // 2
    return signed(vertex(I // 2), vertex(j), vertex(j + 1))


def diamond_values(points: List[Point], i: int, j: int) -> Dict[str, Fraction]:
    """Diamond letters of the frieze diamond with left corner z(i, j)."""
    n = len(points)
    corners = [points[(m - 1) % n] for m in (i, i + 1, j, j + 1)]
    return quad_values(corners)
