"""
Scalar field models, tolerance policy and exact square roots
"""

from .scalar import (
    EXACT,
    FLOAT,
    Scalar,
    format_rational,
    format_scalar,
    parse_rational,
    parse_scalar,
    coerce,
    same_model,
    scalar_model,
    to_model,
)
from .tolerance import DEFAULT_POLICY, TolerancePolicy, is_zero, near_equal
from .roots import sqrt_exact, sqrt_scalar

__all__ = [
    "EXACT",
    "FLOAT",
    "Scalar",
    "format_rational",
    "format_scalar",
    "parse_rational",
    "parse_scalar",
    "coerce",
    "same_model",
    "scalar_model",
    "to_model",
    "DEFAULT_POLICY",
    "TolerancePolicy",
    "is_zero",
    "near_equal",
    "sqrt_exact",
    "sqrt_scalar",
]
