"""
Points on a sphere of curvature K and the two intrinsic measurements
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from errors import ConfigMismatch, DomainError
from numeric import (
    EXACT,
    Scalar,
    near_equal,
    same_model,
    sqrt_exact,
    sqrt_scalar,
)

logger = logging.getLogger(__name__)

Frame = Tuple[Scalar, Scalar, Scalar]
STANDARD_FRAME: Frame = (1, 1, 1)


@dataclass(frozen=True)
class SphereConfig:
    """Sphere of Gaussian curvature K = 1/R2."""

    K: Scalar
    R2: Scalar

    def __post_init__(self):
        model = same_model(self.K, self.R2)
        if self.K <= 0:
            raise DomainError(f"Sphere curvature must be positive, got {self.K}")
        if model == EXACT:
            if self.K * self.R2 != 1:
                raise DomainError("R2 * K must equal 1")
        elif not near_equal(self.K * self.R2, 1.0):
            raise DomainError("R2 * K must equal 1")

    @classmethod
    def from_radius(cls, radius: Scalar) -> "SphereConfig":
        if radius <= 0:
            raise DomainError(f"Radius must be positive, got {radius}")
        R2 = radius * radius
        return cls(K=1 / R2 if isinstance(R2, float) else Fraction(1) / R2, R2=R2)

    @classmethod
    def from_curvature(cls, K: Scalar) -> "SphereConfig":
        if K <= 0:
            raise DomainError(f"Sphere curvature must be positive, got {K}")
        return cls(K=K, R2=1 / K if isinstance(K, float) else Fraction(1) / K)

    @property
    def model(self) -> str:
        return same_model(self.K)

    @property
    def radius(self) -> Optional[Scalar]:
        """R itself; None in the exact model when R is irrational."""
        if self.model == EXACT:
            return sqrt_exact(self.R2)
        return self.R2 ** 0.5


@dataclass(frozen=True)
class SpherePoint:
    """
    A point on the sphere

    Coordinates are given in an orthogonal frame whose squared axis lengths are
    `scale2`; the ambient coordinate k is coords[k] * sqrt(scale2[k]). The plain
    ambient frame is (1, 1, 1); (R2, R2, R2) stores coordinates as rational
    multiples of R.
    """

    x: Scalar
    y: Scalar
    z: Scalar
    config: SphereConfig
    scale2: Frame = field(default=STANDARD_FRAME)

    def __post_init__(self):
        norm = sum(s * c * c for s, c in zip(self.scale2, self.vector))
        if self.config.model == EXACT:
            if norm != self.config.R2:
                raise DomainError(f"Point {self.vector} is not on the sphere R2={self.config.R2}")
        elif not near_equal(float(norm), float(self.config.R2)):
            raise DomainError(f"Point {self.vector} is not on the sphere R2={self.config.R2}")

    @property
    def vector(self) -> Tuple[Scalar, Scalar, Scalar]:
        return (self.x, self.y, self.z)

    @classmethod
    def from_coordinates(cls, x, y, z, config: SphereConfig) -> "SpherePoint":
        return cls(x, y, z, config)

    @classmethod
    def on_radius_frame(cls, x, y, z, config: SphereConfig) -> "SpherePoint":
        """Point R*(x, y, z) with x^2 + y^2 + z^2 = 1."""
        return cls(x, y, z, config, (config.R2, config.R2, config.R2))

    def coordinates(self) -> Tuple[Scalar, Scalar, Scalar]:
        """Ambient coordinates; needs exact roots of the frame scales in the exact model."""
        if self.scale2 == STANDARD_FRAME:
            return self.vector
        return tuple(
            c * sqrt_scalar(s, "frame scale") for c, s in zip(self.vector, self.scale2)
        )

    def in_standard_frame(self) -> "SpherePoint":
        if self.scale2 == STANDARD_FRAME:
            return self
        x, y, z = self.coordinates()
        return SpherePoint(x, y, z, self.config)


def common_frame(*points: SpherePoint) -> List[SpherePoint]:
    """Bring points to one config and one frame, converting to ambient coordinates if frames differ."""
    config = points[0].config
    for point in points[1:]:
        if point.config != config:
            raise ConfigMismatch("Points live on different spheres")
    if len({point.scale2 for point in points}) == 1:
        return list(points)
    return [point.in_standard_frame() for point in points]


def _det3(u, v, w) -> Scalar:
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def frame_volume(scale2: Frame, R2: Scalar) -> Scalar:
    """sqrt(R2 * s0 * s1 * s2); rational in the radius frame and its rescalings."""
    return sqrt_scalar(R2 * scale2[0] * scale2[1] * scale2[2], "frame volume R2*s0*s1*s2")


def sq_dist(A: SpherePoint, B: SpherePoint) -> Scalar:
    """Squared chordal distance x(A,B)."""
    A, B = common_frame(A, B)
    return sum(s * (a - b) ** 2 for s, a, b in zip(A.scale2, A.vector, B.vector))


def s_kappa(A: SpherePoint, B: SpherePoint, C: SpherePoint) -> Scalar:
    """
    Signed measurement S^K(A,B,C) = (2/R) det[A B C] = 12 V(OABC) / R

    Raises:
        ExactSqrtUnavailable: If R is irrational and the points are in ambient coordinates
    """
    A, B, C = common_frame(A, B, C)
    det = _det3(A.vector, B.vector, C.vector)
    if det == 0:
        return det
    return 2 * frame_volume(A.scale2, A.config.R2) / A.config.R2 * det


def stereographic_point(u: Fraction, v: Fraction, config: SphereConfig) -> SpherePoint:
    """Rational point R*(2u, 2v, u^2+v^2-1)/(u^2+v^2+1), stored as a multiple of R."""
    u, v = Fraction(u), Fraction(v)
    denom = u * u + v * v + 1
    return SpherePoint.on_radius_frame(
        2 * u / denom, 2 * v / denom, (u * u + v * v - 1) / denom, config
    )


def _random_parameter(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-12, 12), rng.randint(1, 6))


def random_rational_sphere_point(seed, config: SphereConfig) -> SpherePoint:
    """Seeded rational point; R2 need not be a perfect square."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return stereographic_point(_random_parameter(rng), _random_parameter(rng), config)


def random_rational_polygon(seed, n: int, config: SphereConfig) -> List[SpherePoint]:
    """n seeded rational points, pairwise distinct and pairwise non-antipodal."""
    rng = random.Random(seed)
    points: List[SpherePoint] = []
    while len(points) < n:
        candidate = random_rational_sphere_point(rng, config)
        if all(_separated(candidate, other) for other in points):
            points.append(candidate)
    logger.debug(f"Random polygon seed={seed} n={n}")
    return points


def _separated(A: SpherePoint, B: SpherePoint) -> bool:
    x = sq_dist(A, B)
    return x != 0 and x != 4 * A.config.R2


def points_config(points: Sequence[SpherePoint]) -> SphereConfig:
    if not points:
        raise DomainError("Empty point list")
    return common_frame(*points)[0].config
