"""
Square roots in both scalar models
"""

import math
from fractions import Fraction
from typing import Optional

from errors import DomainError, ExactSqrtUnavailable
from .scalar import EXACT, scalar_model, to_model


def sqrt_exact(value, require_nonnegative_root: bool = True) -> Optional[Fraction]:
    """
    Exact square root of a nonnegative rational

    Args:
        value: Rational input (int or Fraction)
        require_nonnegative_root: Return the nonnegative root (default) or its negative

    Returns:
        r with r*r == value when numerator and denominator are perfect squares, else None

    Raises:
        ModelMismatch: A float input
        DomainError: A negative input
    """
    q = to_model(value, EXACT)
    if q < 0:
        raise DomainError(f"Square root of negative rational {q}")
    num_root = math.isqrt(q.numerator)
    den_root = math.isqrt(q.denominator)
    if num_root * num_root != q.numerator or den_root * den_root != q.denominator:
        return None
    root = Fraction(num_root, den_root)
    return root if require_nonnegative_root else -root


def sqrt_scalar(value, what: str = "value"):
    """
    Nonnegative square root in the model of `value`

    Raises:
        ExactSqrtUnavailable: Exact input that is not a perfect rational square
        DomainError: Negative input
    """
    if scalar_model(value) == EXACT:
        root = sqrt_exact(value)
        if root is None:
            raise ExactSqrtUnavailable(f"{what} {Fraction(value)} is not a rational square")
        return root
    if value < 0:
        raise DomainError(f"Square root of negative {what} {value}")
    return math.sqrt(value)
