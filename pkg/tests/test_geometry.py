"""
Tests for sphere points, the two measurements, chord conversion, point placement and polygon realization.
"""

import math
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import AntipodalOrCoincident, DomainError, HeronViolation, MalformedTriangulation, ModelMismatch
from geometry import (
    SphereConfig,
    SpherePoint,
    Triangulation,
    chord_from_geodesic,
    geodesic_from_chord,
    measure_polygon,
    place_third_point,
    random_rational_polygon,
    realize_polygon,
    s_kappa,
    sq_dist,
    stereographic_point,
)

from .hexagon import HEXAGON_K, HEXAGON_X


# ---------------------------------------------------------------------------
# Sphere configuration and points
# ---------------------------------------------------------------------------

class TestSphere:
    """Points must lie on the sphere they are declared on."""

    def test_radius_and_curvature_agree(self):
        config = SphereConfig.from_radius(Fraction(7))
        assert config.K == HEXAGON_K
        assert config.R2 == 49
        assert config.radius == 7

    def test_irrational_radius_is_absent(self):
        assert SphereConfig.from_curvature(Fraction(1, 2)).radius is None

    def test_nonpositive_curvature(self):
        with pytest.raises(DomainError):
            SphereConfig.from_curvature(Fraction(0))

    def test_off_sphere_point(self):
        config = SphereConfig.from_radius(Fraction(7))
        with pytest.raises(DomainError):
            SpherePoint.from_coordinates(Fraction(7), Fraction(1), Fraction(0), config)

    def test_stereographic_point(self):
        config = SphereConfig.from_radius(Fraction(7))
        point = stereographic_point(Fraction(1), Fraction(2), config).in_standard_frame()
        assert point.vector == (Fraction(7, 3), Fraction(14, 3), Fraction(14, 3))

    def test_random_polygon_is_seeded(self):
        config = SphereConfig.from_curvature(HEXAGON_K)
        first = random_rational_polygon(3, 5, config)
        second = random_rational_polygon(3, 5, config)
        assert first == second


# ---------------------------------------------------------------------------
# Measurements
# ---------------------------------------------------------------------------

class TestMeasurements:
    """Squared chords and the signed measurement on the hexagon."""

    def test_squared_distances(self, hexagon):
        for (u, v), x in HEXAGON_X.items():
            assert sq_dist(hexagon[u - 1], hexagon[v - 1]) == x

    def test_signed_measurement(self, hexagon):
        A1, A2, A3, A4 = hexagon[:4]
        assert s_kappa(A1, A2, A3) == -84
        assert s_kappa(A1, A3, A4) == 28

    def test_signed_measurement_is_alternating(self, hexagon):
        A1, A2, A3 = hexagon[:3]
        assert s_kappa(A2, A1, A3) == 84
        assert s_kappa(A2, A3, A1) == -84

    @settings(max_examples=500, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6))
    def test_heron_on_random_triangles(self, seed):
        from diamond import heron_K

        config = SphereConfig.from_curvature(Fraction(1, 5))
        A, B, C = random_rational_polygon(seed, 3, config)
        S = s_kappa(A, B, C)
        assert S * S == heron_K(sq_dist(A, B), sq_dist(B, C), sq_dist(A, C), config.K)


# ---------------------------------------------------------------------------
# Geodesic conversion
# ---------------------------------------------------------------------------

class TestChords:
    """Geodesic lengths and squared chords convert both ways in float mode."""

    def test_known_distance(self):
        R = 40000 / (2 * math.pi)
        assert chord_from_geodesic(4352.0, R) == pytest.approx(18213709.996, abs=0.01)

    def test_known_chord(self):
        # 18213752 km^2 is the chord of a slightly longer arc than the rounded 4352 km
        R = 40000 / (2 * math.pi)
        assert geodesic_from_chord(18213752, R) == pytest.approx(4352.0052, abs=1e-3)

    def test_inverse(self):
        R = 6371.0
        assert geodesic_from_chord(chord_from_geodesic(1234.5, R), R) == pytest.approx(1234.5)

    def test_exact_input_rejected(self):
        with pytest.raises(ModelMismatch):
            chord_from_geodesic(Fraction(1), 7.0)

    def test_negative_geodesic(self):
        with pytest.raises(DomainError):
            chord_from_geodesic(-1.0, 7.0)

    def test_chord_out_of_range(self):
        with pytest.raises(DomainError):
            geodesic_from_chord(200.0, 7.0)


# ---------------------------------------------------------------------------
# Placement and realization
# ---------------------------------------------------------------------------

class TestPlacement:
    """The third point is fixed by two distances and the signed measurement."""

    def test_hexagon_vertex(self, hexagon):
        A, C = hexagon[0], hexagon[2]
        B = place_third_point(A, C, a=74, c=70, p=-84)
        assert B.vector == (2, 3, 6)

    def test_other_sign_reflects(self, hexagon):
        A, C = hexagon[0], hexagon[2]
        B = place_third_point(A, C, a=74, c=70, p=84)
        assert B.vector != (2, 3, 6)
        assert sq_dist(A, B) == 70
        assert sq_dist(B, C) == 74
        assert s_kappa(A, B, C) == 84

    def test_heron_violation(self, hexagon):
        with pytest.raises(HeronViolation):
            place_third_point(hexagon[0], hexagon[2], a=74, c=70, p=-83)

    def test_antipodal_base(self):
        config = SphereConfig.from_radius(Fraction(7))
        A = SpherePoint.from_coordinates(Fraction(7), Fraction(0), Fraction(0), config)
        C = SpherePoint.from_coordinates(Fraction(-7), Fraction(0), Fraction(0), config)
        with pytest.raises(AntipodalOrCoincident):
            place_third_point(A, C, a=98, c=98, p=0)


class TestRealization:
    """Realized polygons reproduce every pairwise measurement."""

    def test_fan_at_vertex_two(self, hexagon):
        tri = Triangulation.fan(6, apex=2)
        realized = realize_polygon(tri, measure_polygon(hexagon, tri), hexagon[0].config)
        for u, v in combinations(range(6), 2):
            assert sq_dist(realized[u], realized[v]) == sq_dist(hexagon[u], hexagon[v])
        for u, v, w in combinations(range(6), 3):
            assert s_kappa(realized[u], realized[v], realized[w]) == s_kappa(hexagon[u], hexagon[v], hexagon[w])

    def test_zigzag(self, hexagon):
        tri = Triangulation(6, frozenset({(1, 3), (3, 6), (4, 6)}))
        realized = realize_polygon(tri, measure_polygon(hexagon, tri), hexagon[0].config)
        for u, v in combinations(range(6), 2):
            assert sq_dist(realized[u], realized[v]) == sq_dist(hexagon[u], hexagon[v])

    def test_crossing_diagonals(self):
        with pytest.raises(MalformedTriangulation):
            Triangulation(4, frozenset({(1, 3), (2, 4)}))

    def test_wrong_diagonal_count(self):
        with pytest.raises(MalformedTriangulation):
            Triangulation(5, frozenset({(1, 3)}))

    def test_measurement_sign_follows_order(self, hexagon):
        tri = Triangulation.fan(4)
        m = measure_polygon(hexagon[:4], tri)
        assert m.triangle(1, 2, 3) == -m.triangle(2, 1, 3)
