"""
Symbolic propagation of a Heronian frieze from a generic path, and the
denominator check on its entries
"""

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from config import SYMBOLIC_COLUMNS, SYMBOLIC_MAX_ORDER, SYMBOLIC_MAX_TERMS
from errors import DomainError, MalformedPath
from frieze import (
    Frieze,
    FriezeIndex,
    TraversingPath,
    frieze_from_path,
    midpoint_triangle,
    path_indices,
    residue,
    vertical_shape,
)
from geometry import as_edge
from numeric import format_rational

from .reduced_ring import ReducedRing, to_qq
from .tracked import LaurentField, TrackedFraction

logger = logging.getLogger(__name__)

CLEAN = "clean"
RESIDUAL = "residual"


def edge_name(u: int, v: int) -> str:
    u, v = as_edge(u, v)
    return f"x_{u}_{v}"


def triangle_name(triangle: Tuple[int, int, int]) -> str:
    return "p_" + "_".join(str(v) for v in triangle)


def _line_side(label: Tuple[str, int], n: int) -> int:
    return residue(label[1], n)


def _path_names(n: int, start: int, shape: str):
    """Variable names along the path, on its crossed lines, its triangles and its diagonals."""
    nodes, labels = path_indices(start, shape, n)
    names, triangles, diagonals = [], {}, []
    for idx in nodes:
        if idx.is_integer_node:
            name = edge_name(residue(idx.I // 2, n), residue(idx.J // 2, n))
            names.append(name)
            if 4 <= idx.gap <= 2 * n - 4:
                diagonals.append(name)
        else:
            u, v, w = midpoint_triangle(idx, n)
            name = triangle_name((u, v, w))
            triangles[name] = (edge_name(u, v), edge_name(v, w), edge_name(u, w))
            names.append(name)
    line_names = []
    for label in labels:
        r = _line_side(label, n)
        line_names.append(edge_name(r, residue(r + 1, n)))
    return names, line_names, triangles, diagonals


def default_columns(n: int, shape: str) -> int:
    """
    Rows past the start that make the window span n - 2 base rows

    Every entry with 3/2 <= j - i <= n - 3/2 then has its own row or its
    glide partner's row inside the window; the rest are boundary values.
    """
    return max(1, n - 2 - shape.count("i"))


def _edge_key(name: str) -> Tuple[int, int]:
    _, u, v = name.split("_")
    return (int(u), int(v))


@dataclass
class SymbolicRun:
    """A frieze of tracked fractions and the path variables it was built from."""

    laurent: LaurentField
    path: TraversingPath
    names: Tuple[str, ...]
    line_names: Tuple[str, ...]
    frieze: Frieze

    def assignment(self, concrete: TraversingPath) -> Dict[str, Fraction]:
        """Variable values read off a concrete path of the same shape."""
        if (concrete.n, concrete.start, concrete.shape) != (self.path.n, self.path.start, self.path.shape):
            raise MalformedPath("Concrete path does not match the symbolic path")
        values: Dict[str, Fraction] = {}
        pairs = list(zip(self.names, concrete.values)) + list(zip(self.line_names, concrete.lines))
        for name, value in pairs:
            value = Fraction(value)
            if values.setdefault(name, value) != value:
                raise MalformedPath(f"Path gives two values for {name}: {values[name]} and {value}")
        return values

    def specialize(self, concrete: TraversingPath) -> Dict[FriezeIndex, Fraction]:
        values = self.assignment(concrete)
        return {idx: self.laurent.evaluate(entry, values) for idx, entry in self.frieze.nodes.items()}


def symbolic_propagate(
    n: int,
    K,
    path_shape: Optional[str] = None,
    start: int = 1,
    columns: Optional[int] = SYMBOLIC_COLUMNS,
    clear: bool = True,
    max_terms: int = SYMBOLIC_MAX_TERMS,
) -> SymbolicRun:
    """
    Propagate a Heronian frieze whose path entries are independent variables

    Path nodes become x-variables, path midpoints p-variables subject to
    p^2 = H^K of their triangle, crossed lines the side variables. The
    denominators allowed freely are x_e and 1 - K x_e / 4 for every
    interior integer node e of the path.

    Args:
        n: Frieze order, 4 <= n <= FRIEZE_SYMBOLIC_MAX_ORDER
        K: Rational curvature (0 allowed)
        path_shape: Step string; vertical when omitted
        start: Row of the path's first node
        columns: Rows propagated past the path's starting row; when None,
            enough rows for a full fundamental domain
        clear: Greedily clear residual denominators
        max_terms: Numerator size cap

    Raises:
        DomainError: n out of range, or K not rational
        ResourceLimitExceeded: A numerator outgrew max_terms
    """
    if not 4 <= n <= SYMBOLIC_MAX_ORDER:
        raise DomainError(f"Symbolic runs need 4 <= n <= {SYMBOLIC_MAX_ORDER}, got {n}")
    if isinstance(K, float):
        raise DomainError(f"Symbolic runs need a rational curvature, got {K!r}")
    K = Fraction(K)
    shape = vertical_shape(n) if path_shape is None else path_shape
    if columns is None:
        columns = default_columns(n, shape)
    if columns < 1:
        raise DomainError(f"Need at least one propagated row, got {columns}")

    names, line_names, triangles, diagonals = _path_names(n, start, shape)
    x_names = sorted(
        {name for name in names + line_names if name.startswith("x_")}
        | {edge for edges in triangles.values() for edge in edges},
        key=_edge_key,
    )
    ring = ReducedRing(x_names, triangles, K)

    atoms = []
    for name in diagonals:
        x = ring.variable(name)
        atoms.append((name, x))
        if K:
            atoms.append((f"(1 - K/4*{name})", ring.one - x * to_qq(K / 4)))
    lf = LaurentField(ring, atoms, clear=clear, max_terms=max_terms)

    path = TraversingPath(
        n=n,
        start=start,
        shape=shape,
        values=[lf.variable(name) for name in names],
        lines=[lf.variable(name) for name in line_names],
    )
    started = time.perf_counter()
    z = frieze_from_path(path, K, window=(path.end_row, start + columns), check=False, validate=False)
    logger.info(
        f"Symbolic propagation n={n} K={format_rational(K)} shape={shape}: "
        f"{len(z.nodes)} entries in {time.perf_counter() - started:.2f}s"
    )
    return SymbolicRun(laurent=lf, path=path, names=tuple(names), line_names=tuple(line_names), frieze=z)


@dataclass(frozen=True)
class LaurentEntry:
    index: str
    status: str
    atom_exponents: Dict[str, int]
    residuals: Tuple[str, ...] = ()
    residual_degree: int = 0

    def as_dict(self) -> dict:
        return {
            "index": self.index,
            "status": self.status,
            "atom_exponents": dict(self.atom_exponents),
            "residuals": list(self.residuals),
            "residual_degree": self.residual_degree,
        }


@dataclass
class LaurentReport:
    n: int
    curvature: str
    shape: str
    entries: List[LaurentEntry] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def clean(self) -> bool:
        return all(entry.status == CLEAN for entry in self.entries)

    @property
    def worst_residual_degree(self) -> int:
        return max((entry.residual_degree for entry in self.entries), default=0)

    def entry(self, idx: FriezeIndex) -> LaurentEntry:
        for item in self.entries:
            if item.index == str(idx):
                return item
        raise KeyError(str(idx))

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "curvature": self.curvature,
            "shape": self.shape,
            "clean": self.clean,
            "worst_residual_degree": self.worst_residual_degree,
            "elapsed": round(self.elapsed, 3),
            "entries": [entry.as_dict() for entry in self.entries],
        }


def _entry(idx: FriezeIndex, value: TrackedFraction) -> LaurentEntry:
    value = value.normalized()
    return LaurentEntry(
        index=str(idx),
        status=CLEAN if value.is_clean else RESIDUAL,
        atom_exponents=value.atom_exponents(),
        residuals=tuple(str(r) for r in value.residuals),
        residual_degree=value.residual_degree(),
    )


def laurent_verify(
    n: int,
    K,
    path_shape: Optional[str] = None,
    start: int = 1,
    columns: Optional[int] = SYMBOLIC_COLUMNS,
    clear: bool = True,
    max_terms: int = SYMBOLIC_MAX_TERMS,
) -> LaurentReport:
    """
    Check that every propagated entry has a pure atom-monomial denominator

    Returns:
        LaurentReport with one entry per frieze index; residual factors
        are listed verbatim for any entry that is not clean
    """
    started = time.perf_counter()
    run = symbolic_propagate(n, K, path_shape, start=start, columns=columns, clear=clear, max_terms=max_terms)
    report = LaurentReport(n=n, curvature=format_rational(Fraction(K)), shape=run.path.shape)
    for idx, value in sorted(run.frieze.nodes.items()):
        report.entries.append(_entry(idx, value))
    report.elapsed = time.perf_counter() - started
    dirty = sum(1 for entry in report.entries if entry.status != CLEAN)
    logger.info(f"Laurent check n={n}: {len(report.entries) - dirty} clean, {dirty} with residuals")
    return report
