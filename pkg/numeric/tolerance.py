"""
Comparison policy shared by all modules
"""

from dataclasses import dataclass
from fractions import Fraction

from config import ABSOLUTE_EPSILON, RELATIVE_EPSILON
from errors import DomainError
from .scalar import EXACT, same_model

_NUMERIC = (int, Fraction, float)


@dataclass(frozen=True)
class TolerancePolicy:
    """Float tolerances; the exact model ignores both and compares exactly."""

    relative_epsilon: float = RELATIVE_EPSILON
    absolute_epsilon: float = ABSOLUTE_EPSILON

    def __post_init__(self):
        if self.relative_epsilon < 0 or self.absolute_epsilon < 0:
            raise DomainError("Tolerances must be nonnegative")

    @classmethod
    def default(cls) -> "TolerancePolicy":
        return cls()

    @classmethod
    def with_tolerance(cls, epsilon: float) -> "TolerancePolicy":
        """One epsilon for both relative and absolute comparison (the --tolerance flag)."""
        return cls(relative_epsilon=epsilon, absolute_epsilon=epsilon)


DEFAULT_POLICY = TolerancePolicy()


def near_equal(a, b, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """
    Compare two scalars under the policy

    Exact values compare exactly. Floats pass when
    |a-b| <= max(absolute_epsilon, relative_epsilon * max(|a|, |b|)).
    Non-numeric field elements (symbolic entries) use their own equality.
    """
    if not (isinstance(a, _NUMERIC) and isinstance(b, _NUMERIC)):
        return bool(a == b)
    if same_model(a, b) == EXACT:
        return a == b
    bound = max(policy.absolute_epsilon, policy.relative_epsilon * max(abs(a), abs(b)))
    return abs(a - b) <= bound


def is_zero(value, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    if isinstance(value, float):
        return abs(value) <= policy.absolute_epsilon
    return bool(value == 0)
