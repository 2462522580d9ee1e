"""
Triangulated polygons and their measurement sets
"""

__all__ = [
    "Edge",
    "Triangle",
    "Triangulation",
    "MeasurementSet",
    "measurement_set",
    "as_edge",
]

from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, List, Mapping, Sequence, Tuple

from diamond.heron import heron_K
from errors import HeronViolation, MalformedTriangulation
from numeric import DEFAULT_POLICY, Scalar, TolerancePolicy, near_equal

Edge = Tuple[int, int]
Triangle = Tuple[int, int, int]


def _edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


def _crosses(first: Edge, second: Edge) -> bool:
    a, b = first
    c, d = second
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class Triangulation:
    """Convex n-gon on vertices 1..n triangulated by n-3 noncrossing diagonals."""

    n: int
    diagonals: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 3:
            raise MalformedTriangulation(f"Need at least 3 vertices, got {self.n}")
        normalized = frozenset(_edge(i, j) for i, j in self.diagonals)
        object.__setattr__(self, "diagonals", normalized)
        if len(normalized) != self.n - 3:
            raise MalformedTriangulation(
                f"Expected {self.n - 3} diagonals, got {len(normalized)}"
            )
        sides = set(self.sides())
        for i, j in normalized:
            if not (1 <= i < j <= self.n):
                raise MalformedTriangulation(f"Diagonal {(i, j)} outside 1..{self.n}")
            if (i, j) in sides:
                raise MalformedTriangulation(f"{(i, j)} is a side, not a diagonal")
        for first, second in combinations(sorted(normalized), 2):
            if _crosses(first, second):
                raise MalformedTriangulation(f"Diagonals {first} and {second} cross")
        if len(self.triangles()) != self.n - 2:
            raise MalformedTriangulation("Diagonals do not triangulate the polygon")

    @classmethod
    def fan(cls, n: int, apex: int = 1) -> "Triangulation":
        others = [v for v in range(1, n + 1) if v != apex]
        neighbours = {(apex % n) + 1, ((apex - 2) % n) + 1}
        return cls(n, frozenset(_edge(apex, v) for v in others if v not in neighbours))

    def sides(self) -> List[Edge]:
        return [_edge(i, i % self.n + 1) for i in range(1, self.n + 1)]

    def edges(self) -> List[Edge]:
        return sorted(set(self.sides()) | set(self.diagonals))

    def triangles(self) -> List[Triangle]:
        edges = set(self.edges())
        return [
            (i, j, k)
            for i, j, k in combinations(range(1, self.n + 1), 3)
            if (i, j) in edges and (i, k) in edges and (j, k) in edges
        ]


def _permutation_sign(source: Sequence[int], target: Sequence[int]) -> int:
    """Sign of the permutation taking `source` to `target` (same three labels)."""
    positions = [source.index(v) for v in target]
    inversions = sum(
        1 for a, b in combinations(range(3), 2) if positions[a] > positions[b]
    )
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class MeasurementSet:
    """
    x-values on the triangulation's edges and S^K-values on its triangles

    Triangle values are recorded for ordered triples; reading a triangle in
    another order applies the sign of the permutation.
    """

    edge_values: Mapping[Edge, Scalar]
    triangle_values: Mapping[Triangle, Scalar]

    def edge(self, i: int, j: int) -> Scalar:
        try:
            return self.edge_values[_edge(i, j)]
        except KeyError:
            raise MalformedTriangulation(f"No measurement for edge {_edge(i, j)}")

    def triangle(self, i: int, j: int, k: int) -> Scalar:
        wanted = {i, j, k}
        for key, value in self.triangle_values.items():
            if set(key) == wanted:
                return _permutation_sign(key, (i, j, k)) * value
        raise MalformedTriangulation(f"No measurement for triangle {(i, j, k)}")

    def check(self, tri: Triangulation, K: Scalar, policy: TolerancePolicy = DEFAULT_POLICY) -> None:
        """
        Verify coverage of `tri` and the Heron relation on every triangle

        Raises:
            MalformedTriangulation: Missing edge or triangle values
            HeronViolation: S^2 differs from H^K of the triangle's edges
        """
        for i, j in tri.edges():
            self.edge(i, j)
        for i, j, k in tri.triangles():
            s = self.triangle(i, j, k)
            h = heron_K(self.edge(i, j), self.edge(i, k), self.edge(j, k), K)
            if not near_equal(s * s, h, policy):
                raise HeronViolation(f"S^2 = {s * s} but H^K = {h}", index=(i, j, k))


def measurement_set(
    edges: Mapping[Edge, Scalar], triangles: Mapping[Triangle, Scalar]
) -> MeasurementSet:
    return MeasurementSet(
        edge_values={_edge(*e): v for e, v in edges.items()},
        triangle_values=dict(triangles),
    )


def as_edge(i: int, j: int) -> Edge:
    return _edge(i, j)
