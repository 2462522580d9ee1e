"""
Scalar models: exact rationals (Fraction) and binary floats
"""

import re
from fractions import Fraction
from typing import Union

from errors import ModelMismatch, ParseError

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"

_RATIONAL = re.compile(r"^\s*([+-]?)(\d+)(?:\s*/\s*(\d+))?\s*$")


def scalar_model(value) -> str:
    """Return "exact" for int/Fraction values, "float" for floats."""
    if isinstance(value, bool):
        raise ModelMismatch(f"Boolean is not a scalar: {value!r}")
    if isinstance(value, (int, Fraction)):
        return EXACT
    if isinstance(value, float):
        return FLOAT
    raise ModelMismatch(f"Unsupported scalar type {type(value).__name__}")


def same_model(*values) -> str:
    """
    Return the common model of the given scalars

    Plain ints are compatible with both models.

    Raises:
        ModelMismatch: If exact and float values are mixed
    """
    models = {scalar_model(v) for v in values if not isinstance(v, int)}
    if len(models) > 1:
        raise ModelMismatch("Mixed exact and float scalars")
    return models.pop() if models else EXACT


def parse_rational(text: str) -> Fraction:
    """
    Parse "num/den" (den optional) into a Fraction

    Args:
        text: Rational string; a leading "-" or U+2212 minus is accepted

    Returns:
        The Fraction in lowest terms
    """
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            return Fraction(text)
        raise ParseError(f"Expected a rational string, got {text!r}")
    match = _RATIONAL.match(text.replace("−", "-"))
    if not match:
        raise ParseError(f"Malformed rational {text!r}")
    sign, num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ParseError(f"Zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign == "-" else value


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_scalar(text, mode: str = EXACT) -> Scalar:
    """Parse a payload value in the requested model."""
    if mode == EXACT:
        return parse_rational(text)
    if mode != FLOAT:
        raise ParseError(f"Unknown scalar mode {mode!r}")
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        return float(text)
    try:
        return float(text)
    except (TypeError, ValueError):
        return float(parse_rational(text))


def format_scalar(value) -> str:
    if scalar_model(value) == EXACT:
        return format_rational(value)
    return repr(float(value))


def to_model(value, mode: str) -> Scalar:
    if mode == FLOAT:
        return float(value)
    if isinstance(value, float):
        raise ModelMismatch(f"Float {value!r} given where an exact value is required")
    return Fraction(value)


def coerce(*values) -> tuple:
    """Promote plain ints to Fraction so that '/' stays exact."""
    return tuple(
        Fraction(v) if isinstance(v, int) and not isinstance(v, bool) else v
        for v in values
    )
