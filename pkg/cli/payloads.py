"""
JSON payload models for polygons, paths, friezes, quadrilateral requests and reports
"""

from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator

from errors import ParseError
from frieze import (
    Frieze,
    FriezeIndex,
    FriezeKind,
    FriezeReport,
    ThickenedPath,
    TraversingPath,
)
from geometry import SphereConfig, SpherePoint
from numeric import EXACT, format_scalar, parse_scalar

Number = Union[str, int, float]


def _text(value: Number) -> str:
    return value if isinstance(value, str) else format_scalar(value)


def sphere_config(radius: Optional[Number], curvature: Optional[Number], mode: str) -> SphereConfig:
    """Sphere from exactly one of a radius and a curvature."""
    if radius is not None and curvature is not None:
        raise ParseError("Give a radius or a curvature, not both")
    if radius is not None:
        return SphereConfig.from_radius(parse_scalar(radius, mode))
    if curvature is None:
        raise ParseError("The sphere needs a radius or a curvature")
    return SphereConfig.from_curvature(parse_scalar(curvature, mode))


# ----------------------------------------------------------------------
# Polygons
# ----------------------------------------------------------------------


class PointPayload(BaseModel):
    x: Number
    y: Number
    z: Number
    # squared axis lengths of the coordinate frame
    frame: Optional[Tuple[Number, Number, Number]] = None


class PolygonPayload(BaseModel):
    radius: Optional[Number] = None
    curvature: Optional[Number] = None
    points: List[PointPayload] = Field(min_length=3)

    def config(self, mode: str = EXACT) -> SphereConfig:
        return sphere_config(self.radius, self.curvature, mode)

    def to_points(self, mode: str = EXACT) -> List[SpherePoint]:
        config = self.config(mode)
        points = []
        for point in self.points:
            coords = [parse_scalar(v, mode) for v in (point.x, point.y, point.z)]
            if point.frame is None:
                points.append(SpherePoint.from_coordinates(*coords, config))
            else:
                frame = tuple(parse_scalar(v, mode) for v in point.frame)
                points.append(SpherePoint(*coords, config, frame))
        return points


# ----------------------------------------------------------------------
# Friezes
# ----------------------------------------------------------------------


class NodePayload(BaseModel):
    I: int
    J: int
    value: str


class FriezePayload(BaseModel):
    kind: str
    n: int
    curvature: str
    window: Tuple[int, int]
    nodes: List[NodePayload] = Field(min_length=1)
    ne_lines: Dict[str, str]
    se_lines: Dict[str, str]

    @field_validator("kind")
    @classmethod
    def _known_kind(cls, value: str) -> str:
        return FriezeKind.parse(value).value

    @classmethod
    def from_frieze(cls, z: Frieze) -> "FriezePayload":
        return cls(
            kind=z.kind.value,
            n=z.n,
            curvature=format_scalar(z.K),
            window=z.window,
            nodes=[NodePayload(I=idx.I, J=idx.J, value=format_scalar(v)) for idx, v in sorted(z.nodes.items())],
            ne_lines={str(k): format_scalar(v) for k, v in sorted(z.ne_lines.items())},
            se_lines={str(k): format_scalar(v) for k, v in sorted(z.se_lines.items())},
        )

    def to_frieze(self, mode: str = EXACT) -> Frieze:
        return Frieze(
            kind=FriezeKind.parse(self.kind),
            n=self.n,
            K=parse_scalar(self.curvature, mode),
            window=self.window,
            nodes={FriezeIndex(node.I, node.J): parse_scalar(node.value, mode) for node in self.nodes},
            ne_lines={int(k): parse_scalar(v, mode) for k, v in self.ne_lines.items()},
            se_lines={int(k): parse_scalar(v, mode) for k, v in self.se_lines.items()},
        )


# ----------------------------------------------------------------------
# Paths
# ----------------------------------------------------------------------


class PathPayload(BaseModel):
    n: int
    start: int
    shape: str
    values: List[Number]
    lines: List[Number]
    kind: str = FriezeKind.HERONIAN.value
    curvature: Optional[Number] = None

    @classmethod
    def from_path(cls, path: TraversingPath, K=None) -> "PathPayload":
        return cls(
            n=path.n,
            start=path.start,
            shape=path.shape,
            values=[format_scalar(v) for v in path.values],
            lines=[format_scalar(v) for v in path.lines],
            kind=path.kind.value,
            curvature=None if K is None else format_scalar(K),
        )

    def to_path(self, mode: str = EXACT) -> TraversingPath:
        return TraversingPath(
            n=self.n,
            start=self.start,
            shape=self.shape,
            values=[parse_scalar(v, mode) for v in self.values],
            lines=[parse_scalar(v, mode) for v in self.lines],
            kind=FriezeKind.parse(self.kind),
        )


class ThickenedPayload(BaseModel):
    path: PathPayload
    shifted: List[Number]
    curvature: Optional[Number] = None

    @classmethod
    def from_thickened(cls, tp: ThickenedPath, K=None) -> "ThickenedPayload":
        return cls(
            path=PathPayload.from_path(tp.base),
            shifted=[format_scalar(v) for v in tp.shifted],
            curvature=None if K is None else format_scalar(K),
        )

    def to_thickened(self, mode: str = EXACT) -> ThickenedPath:
        return ThickenedPath(base=self.path.to_path(mode), shifted=[parse_scalar(v, mode) for v in self.shifted])


# ----------------------------------------------------------------------
# Quadrilateral completion
# ----------------------------------------------------------------------


class QuadRequest(BaseModel):
    """Five measurements of a quadrilateral, plus p, q or their sign bits."""

    a: Number
    b: Number
    c: Number
    d: Number
    e: Number
    p: Optional[Number] = None
    q: Optional[Number] = None
    signs: Optional[str] = None
    radius: Optional[Number] = None
    curvature: Optional[Number] = None
    measurements: Literal["chordal", "geodesic"] = "chordal"

    @field_validator("signs")
    @classmethod
    def _two_signs(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            value = value.replace("−", "-").replace(",", "").strip()
            if len(value) != 2 or set(value) - {"+", "-"}:
                raise ValueError("signs must be two characters from '+' and '-'")
        return value


class QuadResult(BaseModel):
    f: str
    r: str
    s: str
    p: str
    q: str
    geodesic: Optional[float] = None

    @classmethod
    def build(cls, f, r, s, p, q, geodesic: Optional[float] = None) -> "QuadResult":
        return cls(f=_text(f), r=_text(r), s=_text(s), p=_text(p), q=_text(q), geodesic=geodesic)


# ----------------------------------------------------------------------
# Reports
# ----------------------------------------------------------------------


class ValidationPayload(BaseModel):
    kind: str
    n: int
    passed: bool
    counts: Dict[str, Tuple[int, int]]
    failures: List[Dict[str, Optional[Union[str, bool]]]]

    @classmethod
    def from_report(cls, report: FriezeReport) -> "ValidationPayload":
        return cls(
            kind=report.kind,
            n=report.n,
            passed=report.passed,
            counts=dict(sorted(report.counts().items())),
            failures=[item.as_dict() for item in report.failures()],
        )


class LaurentEntryPayload(BaseModel):
    index: str
    status: str
    atom_exponents: Dict[str, int]
    residuals: List[str]
    residual_degree: int


class LaurentPayload(BaseModel):
    n: int
    curvature: str
    shape: str
    clean: bool
    worst_residual_degree: int
    entries: List[LaurentEntryPayload]

    @classmethod
    def from_report(cls, report) -> "LaurentPayload":
        data = report.as_dict()
        data.pop("elapsed")
        return cls.model_validate(data)
