"""
Windowed Heronian and Cayley-Menger friezes: construction, propagation, validation
"""

from .index import FriezeIndex, glide_image, residue
from .model import (
    Frieze,
    FriezeKind,
    Window,
    boundary_values,
    build_frieze,
    check_window,
    default_window,
    diamond_positions,
    diamond_slots,
    window_indices,
    window_lines,
)
from .paths import (
    STEP_I,
    STEP_J,
    LineLabel,
    midpoint_triangle,
    ThickenedPath,
    TraversingPath,
    path_from_frieze,
    path_indices,
    path_measurements,
    path_to_triangulation,
    thickened_path_from_frieze,
    vertical_shape,
)
from .propagate import cm_frieze_from_thickened_path, frieze_from_path
from .validate import FriezeReport, ValidationItem, frieze_validate
from .construct import frieze_from_polygon, frieze_lift, frieze_restrict, negate_midpoints
from .render import render_ascii

__all__ = [
    "FriezeIndex",
    "glide_image",
    "residue",
    "Frieze",
    "FriezeKind",
    "Window",
    "boundary_values",
    "build_frieze",
    "check_window",
    "default_window",
    "diamond_positions",
    "diamond_slots",
    "window_indices",
    "window_lines",
    "STEP_I",
    "STEP_J",
    "LineLabel",
    "midpoint_triangle",
    "ThickenedPath",
    "TraversingPath",
    "path_from_frieze",
    "path_indices",
    "path_measurements",
    "path_to_triangulation",
    "thickened_path_from_frieze",
    "vertical_shape",
    "cm_frieze_from_thickened_path",
    "frieze_from_path",
    "FriezeReport",
    "ValidationItem",
    "frieze_validate",
    "frieze_from_polygon",
    "frieze_lift",
    "frieze_restrict",
    "negate_midpoints",
    "render_ascii",
]
