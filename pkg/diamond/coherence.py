"""
Coherence of four interlocking Cayley-Menger diamonds and the linear solve
for a missing corner
"""

import logging
from enum import Enum
from typing import Optional, Sequence, Tuple

from errors import CoherencePivotZero, InterlockMismatch, PreconditionViolation
from numeric import DEFAULT_POLICY, TolerancePolicy, coerce, is_zero, near_equal

from .cayley_menger import CayleyMengerDiamond, PartialDirection, scm_partial
from .heron import heron_K, is_degenerate_diagonal

logger = logging.getLogger(__name__)

# Diamonds around a center: 0 left (f is the center), 1 top (c), 2 bottom (a),
# 3 right (e). Each pair names entries that must agree.
INTERLOCKS: Tuple[Tuple[Tuple[int, str], Tuple[int, str]], ...] = (
    ((0, "f"), (1, "c")),
    ((0, "f"), (2, "a")),
    ((0, "f"), (3, "e")),
    ((0, "a"), (1, "e")),
    ((0, "c"), (2, "e")),
    ((1, "f"), (3, "a")),
    ((2, "f"), (3, "c")),
    ((0, "b"), (1, "b")),
    ((2, "b"), (3, "b")),
    ((0, "d"), (2, "d")),
    ((1, "d"), (3, "d")),
)


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


def _check_interlock(
    diamonds: Sequence[Optional[CayleyMengerDiamond]], policy: TolerancePolicy
) -> None:
    for (i, first), (j, second) in INTERLOCKS:
        if diamonds[i] is None or diamonds[j] is None:
            continue
        left = getattr(diamonds[i], first)
        right = getattr(diamonds[j], second)
        if not near_equal(left, right, policy):
            raise InterlockMismatch(
                f"Diamond {i} entry {first}={left} differs from diamond {j} entry {second}={right}"
            )


def coherence_sides(x1, x2, x3, x4, K) -> Tuple[object, object]:
    """Both sides of the coherence equation for (left, top, bottom, right)."""
    lhs = scm_partial(PartialDirection.LEFT, x1, K) * scm_partial(PartialDirection.RIGHT, x4, K)
    rhs = scm_partial(PartialDirection.UP, x2, K) * scm_partial(PartialDirection.DOWN, x3, K)
    return lhs, rhs


def coherence_check(
    x1: CayleyMengerDiamond,
    x2: CayleyMengerDiamond,
    x3: CayleyMengerDiamond,
    x4: CayleyMengerDiamond,
    K,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> bool:
    """
    Check the coherence condition around a shared center

    Args:
        x1: Left diamond, its f is the center
        x2: Top diamond, its c is the center
        x3: Bottom diamond, its a is the center
        x4: Right diamond, its e is the center

    Returns:
        True when left-partial(x1) * right-partial(x4) equals
        up-partial(x2) * down-partial(x3)

    Raises:
        InterlockMismatch: If shared entries disagree
    """
    _check_interlock((x1, x2, x3, x4), policy)
    lhs, rhs = coherence_sides(x1, x2, x3, x4, K)
    return near_equal(lhs, rhs, policy)


def _nonzero_pivot(center, heron_pair, K, policy: TolerancePolicy) -> None:
    if is_degenerate_diagonal(center, K, policy):
        raise CoherencePivotZero(f"Center {center} is 0 or 4/K")
    (x, y, z), (u, v, w) = heron_pair
    if is_zero(heron_K(x, y, z, K) * heron_K(u, v, w, K), policy):
        raise CoherencePivotZero("Heron product at the opposite diamond vanishes")


def coherence_solve(
    side: Side,
    diamonds: Sequence[CayleyMengerDiamond],
    K,
    policy: TolerancePolicy = DEFAULT_POLICY,
):
    """
    Solve the coherence equation for the one unknown corner

    Args:
        side: LEFT finds e of the left diamond from (top, bottom, right);
            RIGHT finds f of the right diamond from (left, top, bottom)
        diamonds: The three known diamonds in that order
        K: Curvature

    Returns:
        The unique value making the configuration coherent

    Raises:
        CoherencePivotZero: If the center or the opposite Heron product is degenerate
        InterlockMismatch: If the known diamonds do not interlock
    """
    side = Side(side)
    if len(diamonds) != 3:
        raise PreconditionViolation(f"Expected three diamonds, got {len(diamonds)}")

    if side is Side.LEFT:
        top, bottom, right = diamonds
        _check_interlock((None, top, bottom, right), policy)
        _nonzero_pivot(right.e, ((right.b, right.c, right.e), (right.a, right.d, right.e)), K, policy)

        def completed(t) -> CayleyMengerDiamond:
            return CayleyMengerDiamond(top.e, top.b, bottom.e, bottom.d, t, right.e)

        def equation(t):
            lhs, rhs = coherence_sides(completed(t), top, bottom, right, K)
            return lhs - rhs
    else:
        left, top, bottom = diamonds
        _check_interlock((left, top, bottom, None), policy)
        _nonzero_pivot(left.f, ((left.a, left.b, left.f), (left.c, left.d, left.f)), K, policy)

        def completed(t) -> CayleyMengerDiamond:
            return CayleyMengerDiamond(top.f, bottom.b, bottom.f, top.d, left.f, t)

        def equation(t):
            lhs, rhs = coherence_sides(left, top, bottom, completed(t), K)
            return lhs - rhs

    # the equation is linear in the unknown
    (zero,) = coerce(0 * diamonds[0].a)
    g0 = equation(zero)
    slope = equation(zero + 1) - g0
    if is_zero(slope, policy):
        raise CoherencePivotZero("Coherence equation does not determine the unknown")
    value = -g0 / slope
    logger.debug(f"Coherence solve {side.value} gave {value}")
    return value
