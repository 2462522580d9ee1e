"""
Spherical Heron polynomial, Heronian diamonds, their checks and flips
"""

from dataclasses import astuple, dataclass, fields
from typing import Dict, Tuple

from errors import DegenerateDiagonal, HeronViolation
from numeric import DEFAULT_POLICY, TolerancePolicy, coerce, is_zero, near_equal

LETTERS = ("a", "b", "c", "d", "e", "f", "p", "q", "r", "s")


def heron_K(a, b, c, K):
    """H^K(a,b,c) = -a^2-b^2-c^2+2ab+2ac+2bc-Kabc."""
    return -a * a - b * b - c * c + 2 * a * b + 2 * a * c + 2 * b * c - K * a * b * c


@dataclass(frozen=True)
class HeronianDiamond:
    """
    Corners a, c, e, f; midpoints p, q, r, s; lines b, d

    For a quadrilateral A1A2A3A4: a=x14, b=x12, c=x23, d=x34, e=x13, f=x24,
    p=S123, q=S134, r=S124, s=S234.
    """

    a: object
    b: object
    c: object
    d: object
    e: object
    f: object
    p: object
    q: object
    r: object
    s: object

    def as_tuple(self) -> Tuple:
        return astuple(self)

    @classmethod
    def from_tuple(cls, values) -> "HeronianDiamond":
        return cls(*values)

    def as_dict(self) -> Dict[str, object]:
        return {item.name: getattr(self, item.name) for item in fields(self)}


def is_degenerate_diagonal(x, K, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """True when x is 0 or 4/K (only 0 when K = 0)."""
    if is_zero(x, policy):
        return True
    if is_zero(K, policy):
        return False
    return near_equal(x * K, 4, policy)


def require_diagonal(x, K, policy: TolerancePolicy = DEFAULT_POLICY, name: str = "e", index=None) -> None:
    if is_degenerate_diagonal(x, K, policy):
        raise DegenerateDiagonal(f"Diagonal {name}={x} is 0 or 4/K", index=index)


def require_heron(value, x, y, z, K, policy: TolerancePolicy = DEFAULT_POLICY, name: str = "p") -> None:
    """Raise HeronViolation unless value^2 = H^K(x,y,z)."""
    h = heron_K(x, y, z, K)
    if not near_equal(value * value, h, policy):
        raise HeronViolation(f"{name}^2 = {value * value} but H^K = {h}")


@dataclass(frozen=True)
class HeronianReport:
    residuals: Dict[str, object]
    passed: bool

    def failures(self) -> Dict[str, object]:
        return {k: v for k, v in self.residuals.items() if not is_zero(v)}


def _equations(d: HeronianDiamond, K) -> Dict[str, Tuple[object, object]]:
    a, b, c, dd, e, f, p, q, r, s, K = coerce(*d.as_tuple(), K)
    return {
        "p_heron": (p * p, heron_K(b, c, e, K)),
        "q_heron": (q * q, heron_K(a, dd, e, K)),
        "r_heron": (r * r, heron_K(a, b, f, K)),
        "s_heron": (s * s, heron_K(c, dd, f, K)),
        "p_plus_q": (p + q, r + s + K / 2 * (a * p + b * q - e * r)),
        "bretschneider": (
            4 * e * f * (1 - K * e / 4),
            (p + q) ** 2 + (a - b + c - dd) ** 2 - K * e * (a - b) * (c - dd),
        ),
        "e_r_minus_s": (e * (r - s), p * (a - dd) + q * (b - c)),
    }


def heronian_check(d: HeronianDiamond, K, policy: TolerancePolicy = DEFAULT_POLICY) -> HeronianReport:
    """Residual (lhs - rhs) of each of the seven diamond equations."""
    residuals = {}
    passed = True
    for name, (lhs, rhs) in _equations(d, K).items():
        residuals[name] = lhs - rhs
        passed = passed and near_equal(lhs, rhs, policy)
    return HeronianReport(residuals=residuals, passed=passed)


def identity_residuals(d: HeronianDiamond, K) -> Dict[str, object]:
    """
    Residuals of the identities every geometric quadrilateral satisfies

    Covers the four p+q identities, the six curvature-free relations, both
    Bretschneider analogues and the p*q form of Bretschneider's formula.
    """
    a, b, c, dd, e, f, p, q, r, s, K = coerce(*d.as_tuple(), K)
    half = K / 2
    return {
        "pq1": p + q - (r + s + half * (a * p + b * q - e * r)),
        "pq2": p + q - (r + s + half * (f * p - c * r - b * s)),
        "pq3": p + q - (r + s + half * (dd * p + c * q - e * s)),
        "pq4": p + q - (r + s + half * (f * q - dd * r - a * s)),
        "relation_a": a * (p + s) - (q * (f - b) + r * (e - dd)),
        "relation_b": b * (s + q) - (p * (f - a) + r * (e - c)),
        "relation_c": c * (q + r) - (p * (f - dd) + s * (e - b)),
        "relation_d": dd * (r + p) - (q * (f - c) + s * (e - a)),
        "relation_e": e * (r - s) - (p * (a - dd) + q * (b - c)),
        "relation_f": f * (p - q) - (r * (c - dd) + s * (b - a)),
        "bretschneider_e": 4 * e * f * (1 - K * e / 4)
        - ((p + q) ** 2 + (a - b + c - dd) ** 2 - K * e * (a - b) * (c - dd)),
        "bretschneider_f": 4 * e * f * (1 - K * f / 4)
        - ((r + s) ** 2 + (a - b + c - dd) ** 2 - K * f * (a - dd) * (c - b)),
        "bretschneider_pq": a * b - a * c - b * dd + c * dd - a * e - b * e - c * e - dd * e
        + e * e + 2 * e * f + half * (a * c * e + b * dd * e - e * e * f) - p * q,
    }


def flip_vertical(d: HeronianDiamond) -> HeronianDiamond:
    """(a,b,c,d,e,f,p,q,r,s) -> (c,d,a,b,e,f,q,p,s,r)."""
    return HeronianDiamond(d.c, d.d, d.a, d.b, d.e, d.f, d.q, d.p, d.s, d.r)


def flip_horizontal(d: HeronianDiamond, K, policy: TolerancePolicy = DEFAULT_POLICY) -> HeronianDiamond:
    """(a,b,c,d,e,f,p,q,r,s) -> (a,d,c,b,f,e,s,r,q,p); e must avoid {0, 4/K}."""
    require_diagonal(d.e, K, policy)
    return HeronianDiamond(d.a, d.d, d.c, d.b, d.f, d.e, d.s, d.r, d.q, d.p)
