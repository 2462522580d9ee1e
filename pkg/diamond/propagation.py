"""
Completion of Heronian diamonds from one half, and the two degenerate patterns
"""

import logging
from enum import Enum
from typing import Mapping, Optional, Tuple

from errors import HeronViolation, PreconditionViolation
from numeric import DEFAULT_POLICY, TolerancePolicy, coerce, is_zero, near_equal

from .heron import HeronianDiamond, LETTERS, require_diagonal, require_heron

logger = logging.getLogger(__name__)


def propagate_lr(
    a, b, c, d, e, p, q, K,
    check: bool = True,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> Tuple[object, object, object]:
    """
    Complete a diamond left to right

    Args:
        a, b, c, d: Corner and line values surrounding the diagonal e
        e: Left diagonal, must avoid {0, 4/K}
        p, q: Left midpoints with p^2 = H^K(b,c,e) and q^2 = H^K(a,d,e)
        K: Curvature
        check: Verify the diagonal and both Heron preconditions first

    Returns:
        (f, r, s), the unique completion
    """
    a, b, c, d, e, p, q, K = coerce(a, b, c, d, e, p, q, K)
    if check:
        require_diagonal(e, K, policy, name="e")
        require_heron(p, b, c, e, K, policy, name="p")
        require_heron(q, a, d, e, K, policy, name="q")

    scale = 1 - K * e / 4
    f = ((p + q) ** 2 + (a - b + c - d) ** 2 - K * e * (a - b) * (c - d)) / (4 * e) / scale
    r = (p * (e + a - d - K * a * e / 2) + q * (e - c + b - K * b * e / 2)) / (2 * e) / scale
    s = (p * (e - a + d - K * d * e / 2) + q * (e + c - b - K * c * e / 2)) / (2 * e) / scale
    return f, r, s


def propagate_rl(
    a, b, c, d, f, r, s, K,
    check: bool = True,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> Tuple[object, object, object]:
    """Complete a diamond right to left; returns (e, p, q)."""
    # horizontal flip swaps b<->d, e<->f, p<->s, q<->r
    e, q, p = propagate_lr(a, d, c, b, f, s, r, K, check=check, policy=policy)
    return e, p, q


class DegeneratePattern(str, Enum):
    """Zero patterns a=q=r=0 and c=p=s=0."""

    AQR = "aqr"
    CPS = "cps"


# zeros, then forced equal pairs, then (midpoint, heron arguments)
_PATTERNS = {
    DegeneratePattern.AQR: (("a", "q", "r"), (("d", "e"), ("f", "b"), ("s", "p")), ("p", ("b", "c", "e"))),
    DegeneratePattern.CPS: (("c", "p", "s"), (("b", "e"), ("f", "d"), ("r", "q")), ("q", ("a", "d", "e"))),
}


def _pick(known: Mapping[str, object], first: str, second: str, policy: TolerancePolicy):
    left, right = known.get(first), known.get(second)
    if left is None and right is None:
        raise PreconditionViolation(f"Neither {first} nor {second} is known")
    if left is not None and right is not None and not near_equal(left, right, policy):
        raise PreconditionViolation(f"Degenerate diamond forces {first} = {second}, got {left} and {right}")
    return left if left is not None else right


def propagate_degenerate(
    pattern: DegeneratePattern,
    known: Mapping[str, object],
    K,
    check: bool = True,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> HeronianDiamond:
    """
    Complete a diamond with one of the two zero patterns

    With a=q=r=0 the diamond is Heronian iff d=e, f=b, s=p and
    p^2 = H^K(b,c,e); with c=p=s=0 iff b=e, f=d, r=q and q^2 = H^K(a,d,e).
    Either member of each forced pair may be the known one.

    Raises:
        PreconditionViolation: Nonzero value in a zero slot, or conflicting pair
        HeronViolation: The remaining Heron constraint fails
    """
    pattern = DegeneratePattern(pattern)
    unknown = set(known) - set(LETTERS)
    if unknown:
        raise PreconditionViolation(f"Unknown diamond entries {sorted(unknown)}")
    zeros, pairs, (mid, heron_args) = _PATTERNS[pattern]
    for name in zeros:
        value = known.get(name)
        if value is not None and not is_zero(value, policy):
            raise PreconditionViolation(f"Pattern {pattern.value} needs {name} = 0, got {value}")

    values = {}
    for first, second in pairs:
        values[first] = values[second] = _pick(known, first, second, policy)
    free = [name for name in LETTERS if name not in values and name not in zeros]
    for name in free:
        if name not in known:
            raise PreconditionViolation(f"Entry {name} is required for pattern {pattern.value}")
        values[name] = known[name]

    sample = values[mid]
    for name in zeros:
        values[name] = 0 * sample

    if check:
        x, y, z = (values[name] for name in heron_args)
        try:
            require_heron(values[mid], x, y, z, K, policy, name=mid)
        except HeronViolation:
            logger.debug(f"Degenerate {pattern.value} diamond rejected: {values}")
            raise
    return HeronianDiamond(**values)


def complete_diamond(
    partial: Mapping[str, object],
    K,
    check: bool = True,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> Optional[HeronianDiamond]:
    """
    Fill in a diamond from whichever half is known, or None if neither is

    Known left half: a,b,c,d,e,p,q. Known right half: a,b,c,d,f,r,s.
    """
    have = {name for name, value in partial.items() if value is not None}
    base = ("a", "b", "c", "d")
    if not set(base) <= have:
        return None
    a, b, c, d = (partial[name] for name in base)
    if {"e", "p", "q"} <= have:
        e, p, q = partial["e"], partial["p"], partial["q"]
        f, r, s = propagate_lr(a, b, c, d, e, p, q, K, check=check, policy=policy)
    elif {"f", "r", "s"} <= have:
        f, r, s = partial["f"], partial["r"], partial["s"]
        e, p, q = propagate_rl(a, b, c, d, f, r, s, K, check=check, policy=policy)
    else:
        return None
    return HeronianDiamond(a, b, c, d, e, f, p, q, r, s)
