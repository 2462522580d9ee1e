"""
Spherical Cayley-Menger determinants, diamonds and partial derivatives
"""

__all__ = [
    "CayleyMengerDiamond",
    "PartialDirection",
    "m4",
    "m4_terms",
    "scm_partial",
    "scm_det",
    "cm_check",
    "cm_residual",
]

import logging
from dataclasses import astuple, dataclass, fields
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import sympy

from errors import DomainError
from numeric import DEFAULT_POLICY, EXACT, TolerancePolicy, coerce, is_zero, same_model

logger = logging.getLogger(__name__)

CM_LETTERS = ("a", "b", "c", "d", "e", "f")

_SYMBOLS = sympy.symbols("a b c d e f K")
Term = Tuple[Fraction, Tuple[int, ...]]


@dataclass(frozen=True)
class CayleyMengerDiamond:
    """a=x14, b=x12, c=x23, d=x34, e=x13, f=x24."""

    a: object
    b: object
    c: object
    d: object
    e: object
    f: object

    def as_tuple(self) -> Tuple:
        return astuple(self)

    @classmethod
    def from_tuple(cls, values) -> "CayleyMengerDiamond":
        return cls(*values)

    def as_dict(self) -> Dict[str, object]:
        return {item.name: getattr(self, item.name) for item in fields(self)}


class PartialDirection(str, Enum):
    """Arrow directions of the diamond and the entry each differentiates by."""

    LEFT = "left"
    RIGHT = "right"
    UP = "up"
    DOWN = "down"
    NE = "ne"
    SE = "se"

    @property
    def variable(self) -> str:
        return _DIRECTION_VARIABLE[self]


_DIRECTION_VARIABLE = {
    PartialDirection.LEFT: "e",
    PartialDirection.RIGHT: "f",
    PartialDirection.UP: "a",
    PartialDirection.DOWN: "c",
    PartialDirection.NE: "b",
    PartialDirection.SE: "d",
}


def _bordered_matrix(table: Sequence[Sequence[object]], corner) -> sympy.Matrix:
    m = len(table)
    rows = [[corner] + [1] * m]
    for i in range(m):
        rows.append([1] + [table[i][j] for j in range(m)])
    return sympy.Matrix(rows)


@lru_cache(maxsize=1)
def _m4_poly() -> sympy.Poly:
    a, b, c, d, e, f, K = _SYMBOLS
    table = [
        [0, b, e, a],
        [b, 0, c, f],
        [e, c, 0, d],
        [a, f, d, 0],
    ]
    det = _bordered_matrix(table, K / 2).det(method="berkowitz")
    poly = sympy.Poly(sympy.expand(det), *_SYMBOLS, domain=sympy.QQ)
    logger.debug(f"Expanded M4 with {len(poly.terms())} terms")
    return poly


def _to_terms(poly: sympy.Poly) -> Tuple[Term, ...]:
    return tuple(
        (Fraction(int(coeff.p), int(coeff.q)), tuple(monom))
        for monom, coeff in poly.terms()
    )


@lru_cache(maxsize=None)
def m4_terms(variable: str = "") -> Tuple[Term, ...]:
    """
    Terms of M^K_4 (or of its derivative by `variable`) over (a,b,c,d,e,f,K)

    Each term is (coefficient, exponent tuple).
    """
    poly = _m4_poly()
    if variable:
        poly = poly.diff(_SYMBOLS[CM_LETTERS.index(variable)])
    return _to_terms(poly)


def _term_values(terms: Tuple[Term, ...], values: Sequence[object]) -> List[object]:
    out = []
    for coeff, exponents in terms:
        term = coeff
        for value, power in zip(values, exponents):
            if power:
                term = term * value ** power
        out.append(term)
    return out


def _evaluate(terms: Tuple[Term, ...], d: CayleyMengerDiamond, K):
    values = coerce(*d.as_tuple(), K)
    total = 0 * values[0]
    for term in _term_values(terms, values):
        total = total + term
    return total


def m4(d: CayleyMengerDiamond, K):
    """Spherical Cayley-Menger determinant M^K_4 of the diamond's six distances."""
    return _evaluate(m4_terms(), d, K)


def scm_partial(direction: PartialDirection, d: CayleyMengerDiamond, K):
    """Exact partial derivative of M^K_4 in the given arrow direction."""
    direction = PartialDirection(direction)
    return _evaluate(m4_terms(direction.variable), d, K)


def cm_residual(d: CayleyMengerDiamond, K) -> Tuple[object, object]:
    """(M^K_4, sum of absolute term values) for scale-aware float checks."""
    values = coerce(*d.as_tuple(), K)
    terms = _term_values(m4_terms(), values)
    total = 0 * values[0]
    size = 0 * values[0]
    for term in terms:
        total = total + term
        size = size + abs(term)
    return total, size


def cm_check(d: CayleyMengerDiamond, K, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """
    True when M^K_4 vanishes

    Floats are compared against the magnitude of the expanded terms, since
    M^K_4 cancels large products.
    """
    total, size = cm_residual(d, K)
    if same_model(*d.as_tuple(), K) == EXACT:
        return total == 0
    return abs(total) <= policy.absolute_epsilon + policy.relative_epsilon * size


def _to_sympy(value):
    if isinstance(value, float):
        return sympy.Float(value)
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def scm_det(table: Sequence[Sequence[object]], K):
    """
    Spherical Cayley-Menger determinant of an m x m squared-distance table

    Args:
        table: Symmetric table with zero diagonal, m >= 3
        K: Curvature placed in the bordered matrix corner as K/2

    Returns:
        The determinant in the scalar model of the inputs

    Raises:
        DomainError: If the table is not square, symmetric or zero-diagonal
    """
    m = len(table)
    if m < 3:
        raise DomainError(f"Need at least 3 points, got {m}")
    if any(len(row) != m for row in table):
        raise DomainError("Distance table is not square")
    flat = [value for row in table for value in row]
    model = same_model(*flat, K)
    for i in range(m):
        if not is_zero(table[i][i]):
            raise DomainError(f"Nonzero diagonal entry at {(i, i)}")
        for j in range(i + 1, m):
            if table[i][j] != table[j][i]:
                raise DomainError(f"Table is not symmetric at {(i, j)}")

    converted = [[_to_sympy(value) for value in row] for row in table]
    corner = _to_sympy(K) / 2
    det = _bordered_matrix(converted, corner).det(method="berkowitz")
    if model == EXACT:
        det = sympy.Rational(det)
        return Fraction(int(det.p), int(det.q))
    return float(det)
