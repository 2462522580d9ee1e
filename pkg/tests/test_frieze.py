"""
Tests for frieze indices, construction from polygons and paths, propagation,
validation, conversion between kinds and rendering.
"""

from dataclasses import replace
from fractions import Fraction

import pytest

from errors import (
    DegenerateDiagonal,
    DomainError,
    ExactSqrtUnavailable,
    IndexOutsideWindow,
    MalformedPath,
    ParseError,
)
from frieze import (
    FriezeIndex,
    FriezeKind,
    ThickenedPath,
    TraversingPath,
    cm_frieze_from_thickened_path,
    frieze_from_path,
    frieze_from_polygon,
    frieze_lift,
    frieze_restrict,
    frieze_validate,
    glide_image,
    negate_midpoints,
    path_from_frieze,
    path_indices,
    path_measurements,
    path_to_triangulation,
    render_ascii,
    residue,
    thickened_path_from_frieze,
    vertical_shape,
)
from geometry import SphereConfig, SpherePoint, random_rational_polygon, realize_polygon

from .hexagon import HEXAGON_K, HEXAGON_MIDPOINTS, HEXAGON_X

K = HEXAGON_K

# vertical path at i = 2 read off the hexagon frieze
PATH_VALUES = [74, -82, 50, Fraction(-528, 7), 52, Fraction(-312, 7), 26, 12, 70]
PATH_LINES = [98, 74, 26, 140]


def hexagon_path() -> TraversingPath:
    return TraversingPath(n=6, start=2, shape="jjjj", values=PATH_VALUES, lines=PATH_LINES)


def random_polygon(seed: int, n: int):
    return random_rational_polygon(seed, n, SphereConfig.from_curvature(K))


# ---------------------------------------------------------------------------
# Indices
# ---------------------------------------------------------------------------

class TestIndex:
    """Doubled coordinates, residues and the glide map."""

    def test_half_integer_node(self):
        idx = FriezeIndex.node(2, "7/2")
        assert idx.as_tuple() == (4, 7)
        assert idx.is_midpoint
        assert str(idx) == "(2, 7/2)"

    def test_rejects_quarter(self):
        with pytest.raises(ParseError):
            FriezeIndex.node("1/4", 2)

    def test_residue(self):
        assert [residue(m, 6) for m in (0, 1, 6, 7, -1)] == [6, 1, 6, 1, 5]

    def test_glide_of_integer_node(self):
        assert glide_image(FriezeIndex.node(0, 2), 6) == FriezeIndex.node(2, 6)

    def test_glide_of_midpoint(self):
        assert glide_image(FriezeIndex.node("1/2", 2), 6) == FriezeIndex.node(2, "13/2")

    def test_glide_twice_translates(self):
        idx = FriezeIndex.node(0, 2)
        assert glide_image(glide_image(idx, 6), 6) == idx.translated(6)


# ---------------------------------------------------------------------------
# Friezes from polygons
# ---------------------------------------------------------------------------

class TestPolygonFrieze:
    """The radius-7 hexagon in both kinds."""

    def test_integer_entries(self, hexagon_frieze):
        for (u, v), x in HEXAGON_X.items():
            assert hexagon_frieze.value(u, v) == x

    def test_midpoint_entries(self, hexagon_frieze):
        values = set(hexagon_frieze.midpoints().values())
        for value in HEXAGON_MIDPOINTS:
            assert value in values

    def test_named_midpoints(self, hexagon_frieze):
        assert hexagon_frieze.value(1, "5/2") == -84
        assert hexagon_frieze.value("1/2", 2) == 12

    def test_boundary_rows(self, hexagon_frieze):
        for idx, value in hexagon_frieze.nodes.items():
            if idx.gap in (0, 1, 11, 12):
                assert value == 0

    def test_passes_validation(self, hexagon_frieze, hexagon_cm_frieze):
        assert frieze_validate(hexagon_frieze).passed
        report = frieze_validate(hexagon_cm_frieze)
        assert report.passed
        assert report.counts()["coherence"][0] > 0

    def test_cm_kind_has_no_midpoints(self, hexagon_cm_frieze):
        assert not hexagon_cm_frieze.midpoints()
        assert hexagon_cm_frieze.value(3, 6) == 116
        assert hexagon_cm_frieze.value(4, 6) == 106
        assert hexagon_cm_frieze.value(3, 5) == 170

    def test_needs_four_vertices(self, hexagon):
        with pytest.raises(DomainError):
            frieze_from_polygon(hexagon[:3])

    def test_irrational_radius_in_ambient_frame(self):
        config = SphereConfig.from_curvature(Fraction(1, 2))
        coords = [(1, 1, 0), (1, -1, 0), (0, 1, 1), (-1, 0, 1)]
        points = [SpherePoint.from_coordinates(*map(Fraction, c), config) for c in coords]
        with pytest.raises(ExactSqrtUnavailable):
            frieze_from_polygon(points)
        cm = frieze_from_polygon(points, FriezeKind.CAYLEY_MENGER)
        assert cm.value(1, 3) == 2

    def test_lookup_outside_window(self, hexagon_frieze):
        far = FriezeIndex.node(20, 23)
        with pytest.raises(IndexOutsideWindow):
            hexagon_frieze.lookup(far)
        assert hexagon_frieze.with_validated().lookup(far) == hexagon_frieze.value(2, 5)

    def test_relabelling_translates(self, hexagon):
        rotated = frieze_from_polygon(hexagon[1:] + hexagon[:1], window=(0, 6))
        direct = frieze_from_polygon(hexagon, window=(1, 7)).translated(-1)
        assert rotated.same_entries(direct)


# ---------------------------------------------------------------------------
# Paths
# ---------------------------------------------------------------------------

class TestPaths:
    """Traversing paths, their triangulations and measurements."""

    def test_vertical_path_indices(self):
        nodes, lines = path_indices(2, "jjjj", 6)
        assert nodes[0] == FriezeIndex.node(2, 3)
        assert nodes[-1] == FriezeIndex.node(2, 7)
        assert len(nodes) == 9
        assert lines == [("se", 3), ("se", 4), ("se", 5), ("se", 6)]

    def test_staircase_path_indices(self):
        nodes, lines = path_indices(3, "jij", 5)
        assert nodes[-1] == FriezeIndex.node(2, 6)
        assert lines == [("se", 4), ("ne", 2), ("se", 5)]

    def test_path_from_frieze(self, hexagon_frieze):
        path = path_from_frieze(hexagon_frieze, 2, vertical_shape(6))
        assert list(path.values) == PATH_VALUES
        assert list(path.lines) == PATH_LINES

    def test_bad_shape(self):
        with pytest.raises(MalformedPath):
            TraversingPath(n=6, start=2, shape="jjj", values=PATH_VALUES, lines=PATH_LINES)

    def test_wrong_value_count(self):
        with pytest.raises(MalformedPath):
            TraversingPath(n=6, start=2, shape="jjjj", values=PATH_VALUES[:-1], lines=PATH_LINES)

    def test_vertical_path_is_a_fan(self):
        tri = path_to_triangulation(hexagon_path())
        assert tri.diagonals == frozenset({(2, 4), (2, 5), (2, 6)})

    def test_staircase_is_a_zigzag(self, hexagon_frieze):
        path = path_from_frieze(hexagon_frieze, 3, "jiji")
        tri = path_to_triangulation(path)
        assert tri.diagonals == frozenset({(3, 5), (2, 5), (2, 6)})
        assert len(tri.triangles()) == 4

    def test_square_path(self):
        path = TraversingPath(n=4, start=0, shape="jj", values=[1, 0, 2, 0, 1], lines=[1, 1])
        assert len(path_to_triangulation(path).diagonals) == 1

    def test_measurements_realize_the_polygon(self, hexagon, hexagon_frieze):
        tri, m = path_measurements(hexagon_path())
        realized = realize_polygon(tri, m, hexagon[0].config)
        rebuilt = frieze_from_polygon(realized)
        assert rebuilt.same_entries(hexagon_frieze)


# ---------------------------------------------------------------------------
# Propagation
# ---------------------------------------------------------------------------

class TestPropagation:
    """Recovering whole friezes from minimal data."""

    def test_hexagon_vertical_path(self, hexagon):
        z = frieze_from_path(hexagon_path(), K, window=(2, 14))
        assert z.validated
        assert z.same_entries(frieze_from_polygon(hexagon, window=(2, 14)))
        assert (z.value(3, 5), z.value(3, 6), z.value(4, 7), z.value(4, 6)) == (170, 116, 14, 106)

    @pytest.mark.parametrize("shape", ["jjjj", "ijjj", "jiji", "iijj", "jjii"])
    def test_any_path_shape(self, hexagon, shape):
        start = 2 + shape.count("i")
        path = path_from_frieze(frieze_from_polygon(hexagon, window=(0, 8)), start, shape)
        z = frieze_from_path(path, K, window=(2, 8))
        assert z.same_entries(frieze_from_polygon(hexagon, window=(2, 8)))

    @pytest.mark.parametrize("seed", [0, 1, 7, 42])
    def test_shuffled_order_is_irrelevant(self, hexagon_frieze, seed):
        path = path_from_frieze(hexagon_frieze, 0, vertical_shape(6))
        plain = frieze_from_path(path, K)
        shuffled = frieze_from_path(path, K, shuffle_seed=seed)
        assert shuffled.same_entries(plain)
        assert plain.same_entries(hexagon_frieze)

    def test_zero_diagonal(self):
        values = list(PATH_VALUES)
        values[2] = 0
        with pytest.raises(DegenerateDiagonal):
            frieze_from_path(TraversingPath(n=6, start=2, shape="jjjj", values=values, lines=PATH_LINES), K)

    def test_path_outside_window(self):
        with pytest.raises(MalformedPath):
            frieze_from_path(hexagon_path(), K, window=(3, 9))

    def test_thickened_hexagon_path(self, hexagon):
        tp = thickened_path_from_frieze(frieze_from_polygon(hexagon, FriezeKind.CAYLEY_MENGER, (2, 14)), 2, "jjjj")
        z = cm_frieze_from_thickened_path(tp, K, window=(2, 14))
        assert z.same_entries(frieze_from_polygon(hexagon, FriezeKind.CAYLEY_MENGER, (2, 14)))
        assert (z.value(4, 7), z.value(4, 6), z.value(5, 7), z.value(3, 6)) == (14, 106, 126, 116)

    @pytest.mark.parametrize("seed", [None, 3])
    def test_thickened_round_trip(self, hexagon_cm_frieze, seed):
        tp = thickened_path_from_frieze(hexagon_cm_frieze, 0, vertical_shape(6))
        z = cm_frieze_from_thickened_path(tp, K, shuffle_seed=seed)
        assert z.same_entries(hexagon_cm_frieze)

    def test_thickening_checks_shifted_ends(self, hexagon_cm_frieze):
        tp = thickened_path_from_frieze(hexagon_cm_frieze, 0, vertical_shape(6))
        shifted = list(tp.shifted)
        shifted[0] += 1
        with pytest.raises(MalformedPath):
            ThickenedPath(base=tp.base, shifted=shifted).sides()


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

class TestValidation:
    """Itemized reports flag exactly what breaks."""

    def test_corrupted_node(self, hexagon_frieze):
        idx = FriezeIndex.node(1, 3)
        nodes = dict(hexagon_frieze.nodes)
        nodes[idx] = nodes[idx] + 1
        report = frieze_validate(replace(hexagon_frieze, nodes=nodes))
        assert not report.passed
        failed = {item.check for item in report.failures()}
        assert {"diamond", "glide"} <= failed
        assert all(item.passed for item in report.items if item.check == "boundary")

    def test_corrupted_cm_node_breaks_coherence(self, hexagon_cm_frieze):
        idx = FriezeIndex.node(2, 5)
        nodes = dict(hexagon_cm_frieze.nodes)
        nodes[idx] = nodes[idx] + 1
        report = frieze_validate(replace(hexagon_cm_frieze, nodes=nodes))
        assert "coherence" in {item.check for item in report.failures()}

    @pytest.mark.parametrize("kind", list(FriezeKind))
    def test_empty_frieze_fails_cleanly(self, hexagon_frieze, kind):
        empty = replace(hexagon_frieze, kind=kind, nodes={}, validated=False)
        report = frieze_validate(empty)
        assert not report.passed
        assert {"boundary", "diamond"} <= {item.check for item in report.failures()}


# ---------------------------------------------------------------------------
# Random polygons
# ---------------------------------------------------------------------------

class TestRandomPolygons:
    """Glide symmetry and periodicity on seeded random rational polygons."""

    @pytest.mark.parametrize("seed", range(50))
    def test_glide_and_translation(self, seed):
        n = 4 + seed % 5
        points = random_polygon(seed, n)
        built = frieze_from_polygon(points, window=(0, 2 * n))
        path = path_from_frieze(built, 0, vertical_shape(n))
        z = frieze_from_path(path, K, window=(0, 2 * n))
        assert z.same_entries(built)
        for idx, value in z.nodes.items():
            image = glide_image(idx, n)
            if image in z:
                assert z[image] == value
            shifted = idx.translated(n)
            if shifted in z:
                assert z[shifted] == value

    @pytest.mark.parametrize("seed", range(20))
    def test_restrict_then_lift(self, seed):
        z = frieze_from_polygon(random_polygon(1000 + seed, 6))
        cm = frieze_restrict(z)
        lo = z.window[0]
        seed_entry = z.nodes[FriezeIndex(2 * lo + 1, 2 * lo + 4)]
        sign = "+" if seed_entry > 0 else "-"
        opposite = "-" if sign == "+" else "+"
        assert frieze_lift(cm, sign).same_entries(z)
        assert frieze_lift(cm, opposite).same_entries(negate_midpoints(z))


# ---------------------------------------------------------------------------
# Conversion between kinds
# ---------------------------------------------------------------------------

class TestConversion:
    """Restriction forgets midpoints; lifting recovers them up to sign."""

    def test_restrict_matches_cm_build(self, hexagon_frieze, hexagon_cm_frieze):
        cm = frieze_restrict(hexagon_frieze)
        assert cm.kind is FriezeKind.CAYLEY_MENGER
        assert cm.same_entries(hexagon_cm_frieze)
        assert frieze_validate(cm).passed

    def test_lift_with_matching_sign(self, hexagon_frieze, hexagon_cm_frieze):
        assert frieze_lift(hexagon_cm_frieze, "+").same_entries(hexagon_frieze)

    def test_lift_with_other_sign(self, hexagon_frieze, hexagon_cm_frieze):
        lifted = frieze_lift(hexagon_cm_frieze, "-")
        assert lifted.same_entries(negate_midpoints(hexagon_frieze))
        assert lifted.value(1, "5/2") == 84

    def test_restrict_needs_heronian(self, hexagon_cm_frieze):
        with pytest.raises(DomainError):
            frieze_restrict(hexagon_cm_frieze)

    def test_restrict_rejects_zero_interior(self, hexagon_frieze):
        nodes = dict(hexagon_frieze.nodes)
        nodes[FriezeIndex.node(1, 3)] = Fraction(0)
        with pytest.raises(DegenerateDiagonal):
            frieze_restrict(replace(hexagon_frieze, nodes=nodes))


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

class TestRender:
    """ASCII strip with boxed integer nodes and line headers."""

    def test_render_hexagon(self, hexagon_frieze):
        text = render_ascii(hexagon_frieze)
        lines = text.splitlines()
        assert lines[0] == "heronian frieze n=6 K=1/49 window=[0, 6]"
        assert lines[1].startswith("-- NE0=140 -- NE1=70")
        assert lines[2].startswith("-- SE0=140")
        assert "[56]" in text
        assert "-528/7" in text
        assert "[-528/7]" not in text

    def test_cells_widen_for_long_entries(self, hexagon_frieze):
        text = render_ascii(hexagon_frieze, cell_width=3)
        assert "-528/7" in text
