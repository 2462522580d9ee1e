"""
Sphere points, chord and signed-volume measurements, point placement and polygon realization
"""

from .sphere import (
    STANDARD_FRAME,
    SphereConfig,
    SpherePoint,
    common_frame,
    frame_volume,
    points_config,
    random_rational_polygon,
    random_rational_sphere_point,
    s_kappa,
    sq_dist,
    stereographic_point,
)
from .chords import chord_from_geodesic, geodesic_from_chord
from .triangulation import Edge, MeasurementSet, Triangle, Triangulation, as_edge, measurement_set
from .placement import diamond_from_points, measure_polygon, place_third_point, realize_polygon

__all__ = [
    "STANDARD_FRAME",
    "SphereConfig",
    "SpherePoint",
    "common_frame",
    "frame_volume",
    "points_config",
    "random_rational_polygon",
    "random_rational_sphere_point",
    "s_kappa",
    "sq_dist",
    "stereographic_point",
    "chord_from_geodesic",
    "geodesic_from_chord",
    "Edge",
    "MeasurementSet",
    "Triangle",
    "Triangulation",
    "as_edge",
    "measurement_set",
    "diamond_from_points",
    "measure_polygon",
    "place_third_point",
    "realize_polygon",
]
