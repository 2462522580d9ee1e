"""
Traversing paths, their thickenings and the zigzag triangulations they encode
"""

__all__ = [
    "STEP_I",
    "STEP_J",
    "LineLabel",
    "TraversingPath",
    "ThickenedPath",
    "path_indices",
    "vertical_shape",
    "path_from_frieze",
    "thickened_path_from_frieze",
    "path_to_triangulation",
    "path_measurements",
    "midpoint_triangle",
]

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from errors import MalformedPath, MalformedTriangulation
from geometry import MeasurementSet, Triangulation, as_edge, measurement_set

from .index import FriezeIndex, residue
from .model import Frieze, FriezeKind

STEP_J = "j"
STEP_I = "i"

# ("ne", i) or ("se", j)
LineLabel = Tuple[str, int]


def vertical_shape(n: int) -> str:
    return STEP_J * (n - 2)


def _check_shape(shape: str, n: int) -> None:
    if n < 4:
        raise MalformedPath(f"Paths need order n >= 4, got {n}")
    if len(shape) != n - 2 or set(shape) - {STEP_I, STEP_J}:
        raise MalformedPath(f"Shape must be {n - 2} steps of 'i'/'j', got {shape!r}")


def path_indices(
    start: int, shape: str, n: int, kind: FriezeKind = FriezeKind.HERONIAN
) -> Tuple[List[FriezeIndex], List[LineLabel]]:
    """
    Indices along a path from z(start, start+1) and the lines it crosses

    A "j" step goes (i, j) -> (i, j+1) through (i, j+1/2) across SE line j;
    an "i" step goes (i, j) -> (i-1, j) through (i-1/2, j) across NE line i-1.
    Cayley-Menger paths omit the midpoints.
    """
    _check_shape(shape, n)
    kind = FriezeKind.parse(kind)
    i, j = start, start + 1
    nodes = [FriezeIndex(2 * i, 2 * j)]
    lines: List[LineLabel] = []
    for step in shape:
        if step == STEP_J:
            midpoint = FriezeIndex(2 * i, 2 * j + 1)
            lines.append(("se", j))
            j += 1
        else:
            midpoint = FriezeIndex(2 * i - 1, 2 * j)
            lines.append(("ne", i - 1))
            i -= 1
        if kind is FriezeKind.HERONIAN:
            nodes.append(midpoint)
        nodes.append(FriezeIndex(2 * i, 2 * j))
    return nodes, lines


@dataclass(frozen=True)
class TraversingPath:
    """
    Values along a traversing path

    `values` follow the order of path_indices; `lines` hold the n-2 crossed
    line values in step order.
    """

    n: int
    start: int
    shape: str
    values: Tuple[object, ...]
    lines: Tuple[object, ...]
    kind: FriezeKind = FriezeKind.HERONIAN

    def __post_init__(self):
        object.__setattr__(self, "kind", FriezeKind.parse(self.kind))
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(self, "lines", tuple(self.lines))
        nodes, labels = path_indices(self.start, self.shape, self.n, self.kind)
        if len(self.values) != len(nodes):
            raise MalformedPath(f"Expected {len(nodes)} path values, got {len(self.values)}")
        if len(self.lines) != len(labels):
            raise MalformedPath(f"Expected {len(labels)} line values, got {len(self.lines)}")

    def indices(self) -> List[FriezeIndex]:
        return path_indices(self.start, self.shape, self.n, self.kind)[0]

    def line_labels(self) -> List[LineLabel]:
        return path_indices(self.start, self.shape, self.n, self.kind)[1]

    def items(self) -> Dict[FriezeIndex, object]:
        return dict(zip(self.indices(), self.values))

    def labelled_lines(self) -> Dict[LineLabel, object]:
        return dict(zip(self.line_labels(), self.lines))

    @property
    def end_row(self) -> int:
        return self.start - self.shape.count(STEP_I)

    @property
    def rows(self) -> Tuple[int, int]:
        return (self.end_row, self.start)

    def sides(self) -> Dict[int, object]:
        """
        Side values x_{r, r+1} by residue r

        The crossed lines give n-2 sides; the two end nodes give the others.
        """
        n = self.n
        indices = self.indices()
        out: Dict[int, object] = {}

        def put(r: int, value) -> None:
            if r in out and out[r] != value:
                raise MalformedPath(f"Conflicting values for side {r}: {out[r]} and {value}")
            out[r] = value

        first, last = indices[0], indices[-1]
        put(residue(first.I // 2, n), self.values[0])
        put(residue(last.I // 2 - 1, n), self.values[-1])
        for (_, k), value in zip(self.line_labels(), self.lines):
            put(residue(k, n), value)
        if len(out) != n:
            raise MalformedPath(f"Path determines {len(out)} of {n} sides")
        return out

    def diagonals(self) -> List[Tuple[FriezeIndex, object]]:
        """Integer nodes strictly inside the path, with their values."""
        n = self.n
        return [
            (idx, value)
            for idx, value in self.items().items()
            if idx.is_integer_node and 4 <= idx.gap <= 2 * n - 4
        ]


@dataclass(frozen=True)
class ThickenedPath:
    """A Cayley-Menger path plus the values of its copy shifted by (1, 1)."""

    base: TraversingPath
    shifted: Tuple[object, ...]

    def __post_init__(self):
        if self.base.kind is not FriezeKind.CAYLEY_MENGER:
            object.__setattr__(
                self,
                "base",
                TraversingPath(
                    n=self.base.n,
                    start=self.base.start,
                    shape=self.base.shape,
                    values=[v for idx, v in self.base.items().items() if idx.is_integer_node],
                    lines=self.base.lines,
                    kind=FriezeKind.CAYLEY_MENGER,
                ),
            )
        object.__setattr__(self, "shifted", tuple(self.shifted))
        if len(self.shifted) != self.base.n - 1:
            raise MalformedPath(f"Expected {self.base.n - 1} shifted values, got {len(self.shifted)}")

    @property
    def n(self) -> int:
        return self.base.n

    def shifted_indices(self) -> List[FriezeIndex]:
        return [idx.translated(1) for idx in self.base.indices()]

    def items(self) -> Dict[FriezeIndex, object]:
        out = self.base.items()
        out.update(zip(self.shifted_indices(), self.shifted))
        return out

    def sides(self) -> Dict[int, object]:
        """Sides from the base path, checked against the shifted end nodes."""
        sides = self.base.sides()
        n = self.n
        indices = self.shifted_indices()
        for idx, value in ((indices[0], self.shifted[0]), (indices[-1], self.shifted[-1])):
            r = residue(idx.I // 2 if idx.gap == 2 else idx.I // 2 - 1, n)
            if sides[r] != value:
                raise MalformedPath(f"Shifted end node {idx} = {value} differs from side {r} = {sides[r]}")
        return sides


def _read_lines(z: Frieze, labels: Sequence[LineLabel]) -> List[object]:
    return [z.ne(k) if which == "ne" else z.se(k) for which, k in labels]


def path_from_frieze(z: Frieze, start: int, shape: str, kind=None) -> TraversingPath:
    """Copy the values of a path out of a frieze."""
    kind = z.kind if kind is None else FriezeKind.parse(kind)
    nodes, labels = path_indices(start, shape, z.n, kind)
    return TraversingPath(
        n=z.n,
        start=start,
        shape=shape,
        values=[z.lookup(idx) for idx in nodes],
        lines=_read_lines(z, labels),
        kind=kind,
    )


def thickened_path_from_frieze(z: Frieze, start: int, shape: str) -> ThickenedPath:
    base = path_from_frieze(z, start, shape, kind=FriezeKind.CAYLEY_MENGER)
    return ThickenedPath(
        base=base,
        shifted=[z.lookup(idx.translated(1)) for idx in base.indices()],
    )


def path_to_triangulation(path: TraversingPath) -> Triangulation:
    """The zigzag triangulation whose diagonals are the path's interior integer nodes."""
    n = path.n
    diagonals = frozenset(
        as_edge(residue(idx.I // 2, n), residue(idx.J // 2, n)) for idx, _ in path.diagonals()
    )
    try:
        return Triangulation(n, diagonals)
    except MalformedTriangulation as exc:
        raise MalformedPath(f"Path does not encode a triangulation: {exc}") from exc


def midpoint_triangle(idx: FriezeIndex, n: int) -> Tuple[int, int, int]:
    """Ordered residue triple whose S value sits at a midpoint."""
    if idx.I % 2:
        i = (idx.I - 1) // 2
        return (residue(i, n), residue(i + 1, n), residue(idx.J // 2, n))
    j = (idx.J - 1) // 2
    return (residue(idx.I // 2, n), residue(j, n), residue(j + 1, n))


def path_measurements(path: TraversingPath) -> Tuple[Triangulation, MeasurementSet]:
    """
    Triangulation and measurement set carried by a Heronian path

    Midpoint (i, j+1/2) holds S_<i><j><j+1> and (i+1/2, j) holds S_<i><i+1><j>,
    recorded for those ordered triples.
    """
    if path.kind is not FriezeKind.HERONIAN:
        raise MalformedPath("Measurements need a Heronian path")
    n = path.n
    tri = path_to_triangulation(path)
    edges = {(r, residue(r + 1, n)): value for r, value in path.sides().items()}
    triangles = {}
    for idx, value in path.items().items():
        if idx.is_integer_node:
            if 4 <= idx.gap <= 2 * n - 4:
                edges[(residue(idx.I // 2, n), residue(idx.J // 2, n))] = value
        else:
            triangles[midpoint_triangle(idx, n)] = value
    return tri, measurement_set(edges, triangles)
