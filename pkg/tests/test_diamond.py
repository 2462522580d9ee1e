"""
Tests for Heronian and Cayley-Menger diamonds: propagation, flips, degenerate
patterns, determinant partials, coherence, restriction and lifting.
"""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from diamond import (
    CayleyMengerDiamond,
    DegeneratePattern,
    HeronianDiamond,
    PartialDirection,
    Side,
    cm_check,
    coherence_check,
    coherence_sides,
    coherence_solve,
    complete_diamond,
    flip_horizontal,
    flip_vertical,
    heron_K,
    heronian_check,
    identity_residuals,
    lift,
    lift_both,
    m4,
    parse_sign,
    product_residuals,
    propagate_degenerate,
    propagate_lr,
    propagate_rl,
    restrict,
    scm_det,
    scm_partial,
    to_cayley_menger,
)
from errors import (
    CoherencePivotZero,
    DegenerateDiagonal,
    DomainError,
    HeronViolation,
    InterlockMismatch,
    ParseError,
    PreconditionViolation,
)
from geometry import SphereConfig, diamond_from_points, random_rational_polygon

from .hexagon import HEXAGON_DIAMOND, HEXAGON_K

K = HEXAGON_K
HEX = HeronianDiamond.from_tuple(HEXAGON_DIAMOND)
HEX_CM = CayleyMengerDiamond(14, 70, 74, 98, 56, 50)

# the four diamonds around x25 = 52: left, top, bottom, right
X1 = CayleyMengerDiamond(126, 70, 50, 74, 14, 52)
X2 = CayleyMengerDiamond(140, 70, 52, 26, 126, 26)
X3 = CayleyMengerDiamond(52, 74, 98, 74, 50, 170)
X4 = CayleyMengerDiamond(26, 74, 170, 26, 52, 116)

seeds = st.integers(min_value=0, max_value=10**9)


def random_quadrilateral(seed: int, curvature=K) -> HeronianDiamond:
    config = SphereConfig.from_curvature(curvature)
    return diamond_from_points(*random_rational_polygon(seed, 4, config))


# ---------------------------------------------------------------------------
# Heron polynomial and determinants
# ---------------------------------------------------------------------------

class TestHeronAndDeterminant:
    """H^K and the bordered Cayley-Menger determinant."""

    def test_heron_hexagon_triangle(self):
        assert heron_K(70, 74, 56, K) == 7056

    def test_heron_coincident(self):
        assert heron_K(9, 9, 0, K) == 0

    def test_heron_collinear_flat(self):
        assert heron_K(1, 1, 4, 0) == 0

    def test_det_vanishes_on_cospherical_points(self):
        table = [[0, 70, 56, 14], [70, 0, 74, 50], [56, 74, 0, 98], [14, 50, 98, 0]]
        assert scm_det(table, K) == 0

    def test_det_perturbed(self):
        table = [[0, 70, 56, 14], [70, 0, 74, 51], [56, 74, 0, 98], [14, 51, 98, 0]]
        assert scm_det(table, K) != 0

    def test_det_of_triangle_is_minus_heron(self):
        table = [[0, 70, 56], [70, 0, 74], [56, 74, 0]]
        assert scm_det(table, K) == -7056

    def test_det_rejects_asymmetric(self):
        with pytest.raises(DomainError):
            scm_det([[0, 1, 2], [1, 0, 3], [2, 4, 0]], K)

    def test_det_rejects_nonzero_diagonal(self):
        with pytest.raises(DomainError):
            scm_det([[1, 1, 2], [1, 0, 3], [2, 3, 0]], K)

    def test_m4_matches_det(self):
        assert m4(CayleyMengerDiamond(14, 70, 74, 98, 56, 51), K) == scm_det(
            [[0, 70, 56, 14], [70, 0, 74, 51], [56, 74, 0, 98], [14, 51, 98, 0]], K
        )

    def test_right_partial(self):
        assert scm_partial(PartialDirection.RIGHT, HEX_CM, K) == 4704

    @settings(max_examples=500, deadline=None)
    @given(
        st.tuples(*[st.integers(min_value=-60, max_value=60)] * 6),
        st.fractions(min_value=0, max_value=1, max_denominator=50),
    )
    def test_squared_partial_identity(self, values, curvature):
        d = CayleyMengerDiamond(*map(Fraction, values))
        a, b, c, dd, e, f = d.as_tuple()
        M = m4(d, curvature)
        assume(M != 0)
        right = scm_partial(PartialDirection.RIGHT, d, curvature)
        lhs = right * right + 8 * e * (1 - curvature * e / 4) * M
        assert lhs == 4 * heron_K(b, c, e, curvature) * heron_K(a, dd, e, curvature)


# ---------------------------------------------------------------------------
# Propagation formulas
# ---------------------------------------------------------------------------

class TestPropagation:
    """Completion of a diamond from its left or right half."""

    def test_left_to_right(self):
        assert propagate_lr(14, 70, 74, 98, 56, -84, 28, K) == (50, 42, -82)

    def test_right_to_left(self):
        assert propagate_rl(14, 70, 74, 98, 50, 42, -82, K) == (56, -84, 28)

    def test_zero_diagonal(self):
        with pytest.raises(DegenerateDiagonal):
            propagate_lr(0, 0, 0, 0, 0, 0, 0, K)

    def test_antipodal_diagonal(self):
        with pytest.raises(DegenerateDiagonal):
            propagate_lr(14, 70, 74, 98, 196, 0, 0, K)

    def test_zero_right_diagonal(self):
        with pytest.raises(DegenerateDiagonal):
            propagate_rl(14, 70, 74, 98, 0, 42, -82, K)

    def test_heron_violation(self):
        with pytest.raises(HeronViolation):
            propagate_lr(14, 70, 74, 98, 56, -83, 28, K)

    def test_complete_from_either_half(self):
        left = dict(a=14, b=70, c=74, d=98, e=56, p=-84, q=28)
        right = dict(a=14, b=70, c=74, d=98, f=50, r=42, s=-82)
        assert complete_diamond(left, K) == HEX
        assert complete_diamond(right, K) == HEX

    def test_complete_without_a_half(self):
        assert complete_diamond(dict(a=14, b=70, c=74, d=98, e=56), K) is None

    @settings(max_examples=100, deadline=None)
    @given(seeds)
    def test_round_trip(self, seed):
        d = random_quadrilateral(seed)
        f, r, s = propagate_lr(d.a, d.b, d.c, d.d, d.e, d.p, d.q, K)
        assert (f, r, s) == (d.f, d.r, d.s)
        assert propagate_rl(d.a, d.b, d.c, d.d, f, r, s, K) == (d.e, d.p, d.q)


# ---------------------------------------------------------------------------
# Flips and degenerate diamonds
# ---------------------------------------------------------------------------

class TestFlipsAndDegenerate:
    """Symmetries of diamonds and the two zero patterns."""

    def test_vertical_flip(self):
        assert flip_vertical(HEX).as_tuple() == (74, 98, 14, 70, 56, 50, 28, -84, -82, 42)

    def test_flips_are_involutions(self):
        assert flip_vertical(flip_vertical(HEX)) == HEX
        assert flip_horizontal(flip_horizontal(HEX, K), K) == HEX

    def test_flipped_diamonds_stay_heronian(self):
        assert heronian_check(flip_vertical(HEX), K).passed
        assert heronian_check(flip_horizontal(HEX, K), K).passed

    def test_horizontal_flip_needs_diagonal(self):
        bad = HeronianDiamond(0, 0, 0, 0, 0, 0, 0, 0, 0, 0)
        with pytest.raises(DegenerateDiagonal):
            flip_horizontal(bad, K)

    def test_aqr_pattern(self):
        d = propagate_degenerate(DegeneratePattern.AQR, dict(b=70, c=74, e=56, p=-84), K)
        assert (d.d, d.f, d.s) == (56, 70, -84)
        assert (d.a, d.q, d.r) == (0, 0, 0)
        assert heronian_check(d, K).passed

    def test_cps_pattern(self):
        d = propagate_degenerate(DegeneratePattern.CPS, dict(a=14, d=98, e=70, q=42), K)
        assert (d.b, d.f, d.r) == (70, 98, 42)
        assert heronian_check(d, K).passed

    def test_pattern_with_corrupted_midpoint(self):
        with pytest.raises(HeronViolation):
            propagate_degenerate(DegeneratePattern.AQR, dict(b=70, c=74, e=56, p=-83), K)

    def test_pattern_with_nonzero_slot(self):
        with pytest.raises(PreconditionViolation):
            propagate_degenerate(DegeneratePattern.AQR, dict(a=1, b=70, c=74, e=56, p=-84), K)

    def test_pattern_with_conflicting_pair(self):
        with pytest.raises(PreconditionViolation):
            propagate_degenerate(DegeneratePattern.AQR, dict(b=70, c=74, e=56, d=57, p=-84), K)


# ---------------------------------------------------------------------------
# Checks and identities
# ---------------------------------------------------------------------------

class TestChecks:
    """The seven diamond equations and the single Cayley-Menger equation."""

    def test_hexagon_diamond_passes(self):
        report = heronian_check(HEX, K)
        assert report.passed
        assert all(v == 0 for v in report.residuals.values())

    def test_corrupted_diamond_fails(self):
        bad = HeronianDiamond(14, 70, 74, 98, 56, 50, -84, 28, 42, -81)
        report = heronian_check(bad, K)
        assert not report.passed
        assert "s_heron" in report.failures()

    def test_cm_check(self):
        assert cm_check(HEX_CM, K)
        assert not cm_check(CayleyMengerDiamond(14, 70, 74, 98, 56, 51), K)
        assert cm_check(CayleyMengerDiamond(0, 0, 0, 0, 0, 0), K)

    def test_cm_check_float(self):
        assert cm_check(CayleyMengerDiamond(14.0, 70.0, 74.0, 98.0, 56.0, 50.0), 1 / 49)


class TestIdentitySuites:
    """Every identity holds exactly on random geometric quadrilaterals."""

    @settings(max_examples=500, deadline=None)
    @given(seeds)
    def test_quadrilateral_identities(self, seed):
        d = random_quadrilateral(seed)
        assert heronian_check(d, K).passed
        residuals = identity_residuals(d, K)
        assert {name for name, value in residuals.items() if value != 0} == set()

    @settings(max_examples=500, deadline=None)
    @given(seeds)
    def test_partial_product_identities(self, seed):
        d = random_quadrilateral(seed)
        assert m4(to_cayley_menger(d), K) == 0
        assert all(value == 0 for value in product_residuals(d, K).values())

    @settings(max_examples=100, deadline=None)
    @given(seeds, st.sampled_from([Fraction(1), Fraction(1, 3), Fraction(2, 5)]))
    def test_identities_at_other_curvatures(self, seed, curvature):
        d = random_quadrilateral(seed, curvature)
        assert heronian_check(d, curvature).passed
        assert all(value == 0 for value in identity_residuals(d, curvature).values())


# ---------------------------------------------------------------------------
# Coherence
# ---------------------------------------------------------------------------

class TestCoherence:
    """Four interlocking Cayley-Menger diamonds around x25."""

    def test_hexagon_block_is_coherent(self):
        assert coherence_check(X1, X2, X3, X4, K)

    def test_perturbed_corner(self):
        bad = CayleyMengerDiamond(26, 74, 170, 26, 52, 117)
        assert not coherence_check(X1, X2, X3, bad, K)

    def test_shared_entries_must_agree(self):
        bad = CayleyMengerDiamond(26, 74, 170, 26, 53, 116)
        with pytest.raises(InterlockMismatch):
            coherence_check(X1, X2, X3, bad, K)

    def test_sides_agree_up_to_sign_squared(self):
        lhs, rhs = coherence_sides(X1, X2, X3, X4, K)
        assert lhs * lhs == rhs * rhs

    def test_solve_left(self):
        assert coherence_solve(Side.LEFT, (X2, X3, X4), K) == 14

    def test_solve_right(self):
        assert coherence_solve(Side.RIGHT, (X1, X2, X3), K) == 116

    def test_solved_diamond_is_cayley_menger(self):
        f = coherence_solve(Side.RIGHT, (X1, X2, X3), K)
        assert cm_check(CayleyMengerDiamond(X2.f, X3.b, X3.f, X2.d, X1.f, f), K)

    def test_zero_pivot(self):
        zero = CayleyMengerDiamond(0, 0, 0, 0, 0, 0)
        with pytest.raises(CoherencePivotZero):
            coherence_solve(Side.LEFT, (zero, zero, zero), K)


# ---------------------------------------------------------------------------
# Restriction and lifting
# ---------------------------------------------------------------------------

class TestRestrictLift:
    """Forgetting midpoints and recovering them up to one sign."""

    def test_restrict_hexagon(self):
        assert restrict(HEX, K) == HEX_CM

    def test_restrict_degenerate(self):
        d = propagate_degenerate(DegeneratePattern.AQR, dict(b=70, c=74, e=56, p=-84), K)
        cm = restrict(d, K)
        assert (cm.d, cm.f) == (cm.e, cm.b)
        assert m4(cm, K) == 0

    def test_restrict_rejects_bad_midpoints(self):
        bad = HeronianDiamond(14, 70, 74, 98, 56, 50, -84, 28, 42, 82)
        with pytest.raises(PreconditionViolation):
            restrict(bad, K)

    def test_lift_minus(self):
        d = lift(HEX_CM, K, sign="-")
        assert (d.p, d.q, d.r, d.s) == (-84, 28, 42, -82)

    def test_lift_plus(self):
        d = lift(HEX_CM, K, sign=1)
        assert (d.p, d.q, d.r, d.s) == (84, -28, -42, 82)

    def test_lift_from_known_p(self):
        assert lift(HEX_CM, K, p=-84) == HEX

    def test_lift_needs_one_choice(self):
        with pytest.raises(PreconditionViolation):
            lift(HEX_CM, K)
        with pytest.raises(PreconditionViolation):
            lift(HEX_CM, K, sign=1, p=84)

    def test_lift_rejects_nonzero_determinant(self):
        with pytest.raises(PreconditionViolation):
            lift(CayleyMengerDiamond(14, 70, 74, 98, 56, 51), K, sign=1)

    def test_lift_both_differ_by_negation(self):
        plus, minus = lift_both(HEX_CM, K)
        assert (plus.p, plus.q, plus.r, plus.s) == (-minus.p, -minus.q, -minus.r, -minus.s)

    def test_parse_sign(self):
        assert parse_sign("plus") == 1
        assert parse_sign("−") == -1
        with pytest.raises(ParseError):
            parse_sign("?")

    @settings(max_examples=100, deadline=None)
    @given(seeds)
    def test_lift_inverts_restrict(self, seed):
        d = random_quadrilateral(seed)
        assume(all(v != 0 for v in (d.p, d.q, d.r, d.s)))
        sign = 1 if d.p > 0 else -1
        assert lift(restrict(d, K), K, sign=sign) == d
