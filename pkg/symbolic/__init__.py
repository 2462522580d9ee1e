"""
Exact symbolic propagation and the denominator check for Heronian friezes
"""

from .reduced_ring import PolyOp, ReducedRing, from_qq, to_qq, total_degree
from .tracked import LaurentField, TrackedFraction
from .laurent import (
    CLEAN,
    RESIDUAL,
    LaurentEntry,
    LaurentReport,
    SymbolicRun,
    default_columns,
    edge_name,
    laurent_verify,
    symbolic_propagate,
    triangle_name,
)

__all__ = [
    "PolyOp",
    "ReducedRing",
    "from_qq",
    "to_qq",
    "total_degree",
    "LaurentField",
    "TrackedFraction",
    "CLEAN",
    "RESIDUAL",
    "LaurentEntry",
    "LaurentReport",
    "SymbolicRun",
    "default_columns",
    "edge_name",
    "laurent_verify",
    "symbolic_propagate",
    "triangle_name",
]
