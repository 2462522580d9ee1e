"""
Restriction of Heronian diamonds to Cayley-Menger diamonds, and the two-fold lift back
"""

from typing import Dict, Tuple

from errors import ParseError, PreconditionViolation
from numeric import DEFAULT_POLICY, TolerancePolicy, coerce, is_zero, near_equal, sqrt_scalar

from .cayley_menger import CayleyMengerDiamond, PartialDirection, cm_check, scm_partial
from .heron import HeronianDiamond, heron_K, is_degenerate_diagonal, require_heron

# coefficient and midpoint pair with coefficient * m1 * m2 = partial in that direction
PRODUCT_IDENTITIES: Dict[PartialDirection, Tuple[int, str, str]] = {
    PartialDirection.LEFT: (-2, "r", "s"),
    PartialDirection.RIGHT: (-2, "p", "q"),
    PartialDirection.NE: (2, "q", "s"),
    PartialDirection.SE: (2, "p", "r"),
    PartialDirection.UP: (2, "p", "s"),
    PartialDirection.DOWN: (2, "r", "q"),
}


def parse_sign(sign) -> int:
    """Accept +1/-1 or the strings "+", "-", "plus", "minus"."""
    if isinstance(sign, int) and not isinstance(sign, bool) and sign in (1, -1):
        return sign
    text = str(sign).strip().replace("−", "-").lower()
    if text in ("+", "+1", "1", "plus"):
        return 1
    if text in ("-", "-1", "minus"):
        return -1
    raise ParseError(f"Sign must be + or -, got {sign!r}")


def to_cayley_menger(d: HeronianDiamond) -> CayleyMengerDiamond:
    return CayleyMengerDiamond(d.a, d.b, d.c, d.d, d.e, d.f)


def _restrictable(d: HeronianDiamond, K, policy: TolerancePolicy) -> bool:
    if all(is_zero(v, policy) for v in (d.a, d.q, d.r)):
        return True
    if all(is_zero(v, policy) for v in (d.c, d.p, d.s)):
        return True
    return not (
        is_degenerate_diagonal(d.e, K, policy) and is_degenerate_diagonal(d.f, K, policy)
    )


def _product_sides(d: HeronianDiamond, K):
    cm = to_cayley_menger(d)
    for direction, (coeff, first, second) in PRODUCT_IDENTITIES.items():
        product = coeff * getattr(d, first) * getattr(d, second)
        yield direction.value, product, scm_partial(direction, cm, K)


def product_residuals(d: HeronianDiamond, K) -> Dict[str, object]:
    """Residual of each midpoint product identity, keyed by direction."""
    return {name: product - partial for name, product, partial in _product_sides(d, K)}


def restrict(
    d: HeronianDiamond, K, policy: TolerancePolicy = DEFAULT_POLICY
) -> CayleyMengerDiamond:
    """
    Forget the midpoints of a Heronian diamond

    Raises:
        PreconditionViolation: If none of a=q=r=0, c=p=s=0 or a nondegenerate
            diagonal holds, or the result fails M^K_4 = 0 or a product identity
    """
    if not _restrictable(d, K, policy):
        raise PreconditionViolation("Both diagonals are 0 or 4/K")
    cm = to_cayley_menger(d)
    if not cm_check(cm, K, policy):
        raise PreconditionViolation("Restricted diamond has nonzero M^K_4")
    failed = [
        name for name, product, partial in _product_sides(d, K)
        if not near_equal(product, partial, policy)
    ]
    if failed:
        raise PreconditionViolation(f"Product identities fail in directions {failed}")
    return cm


def lift(
    d: CayleyMengerDiamond,
    K,
    sign=None,
    p=None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> HeronianDiamond:
    """
    Extend a Cayley-Menger diamond by its four midpoints

    Exactly one of `sign` and `p` must be given. The two choices of sign give
    diamonds differing by a simultaneous negation of p, q, r, s.

    Args:
        d: Diamond with M^K_4 = 0 and nonvanishing Heron values
        K: Curvature
        sign: +1 or -1 (or "+"/"-"), the sign of p = sqrt(H^K(b,c,e))
        p: A known value of p, checked against H^K(b,c,e)

    Returns:
        The Heronian diamond with q = -right/(2p), r = se/(2p), s = up/(2p)

    Raises:
        PreconditionViolation: Degenerate diagonals, a vanishing Heron value or M^K_4 != 0
        ExactSqrtUnavailable: H^K(b,c,e) is not a rational square in exact mode
    """
    if (sign is None) == (p is None):
        raise PreconditionViolation("Give exactly one of sign and p")
    a, b, c, dd, e, f, K = coerce(*d.as_tuple(), K)
    if is_degenerate_diagonal(e, K, policy) and is_degenerate_diagonal(f, K, policy):
        raise PreconditionViolation("Both diagonals are 0 or 4/K")
    herons = (heron_K(b, c, e, K), heron_K(a, dd, e, K), heron_K(a, b, f, K), heron_K(c, dd, f, K))
    if any(is_zero(h, policy) for h in herons):
        raise PreconditionViolation("A triangle of the diamond has vanishing H^K")
    if not cm_check(d, K, policy):
        raise PreconditionViolation("Diamond has nonzero M^K_4")

    if p is None:
        p = parse_sign(sign) * sqrt_scalar(herons[0], what="H^K(b,c,e)")
    else:
        (p,) = coerce(p)
        require_heron(p, b, c, e, K, policy, name="p")

    q = -scm_partial(PartialDirection.RIGHT, d, K) / (2 * p)
    r = scm_partial(PartialDirection.SE, d, K) / (2 * p)
    s = scm_partial(PartialDirection.UP, d, K) / (2 * p)
    return HeronianDiamond(a, b, c, dd, e, f, p, q, r, s)


def lift_both(d: CayleyMengerDiamond, K, policy: TolerancePolicy = DEFAULT_POLICY) -> Tuple[HeronianDiamond, HeronianDiamond]:
    return lift(d, K, sign=1, policy=policy), lift(d, K, sign=-1, policy=policy)
