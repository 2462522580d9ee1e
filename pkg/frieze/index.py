"""
Doubled half-integer frieze indices, residues and the glide map
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from errors import ParseError
from numeric import format_rational, parse_rational

Half = Union[int, Fraction, str]


def residue(m: int, n: int) -> int:
    """<m> in {1, ..., n} with <m> = m mod n."""
    return ((m - 1) % n) + 1


def _doubled(value: Half) -> int:
    if isinstance(value, str):
        value = parse_rational(value)
    doubled = Fraction(value) * 2
    if doubled.denominator != 1:
        raise ParseError(f"{value} is not an integer or half-integer")
    return int(doubled)


@dataclass(frozen=True, order=True)
class FriezeIndex:
    """
    Node (I/2, J/2) of a frieze

    Integer nodes have I and J even; midpoints have exactly one of them odd.
    """

    I: int
    J: int

    @classmethod
    def node(cls, i: Half, j: Half) -> "FriezeIndex":
        """Index from half-integer coordinates, e.g. node(2, "7/2")."""
        return cls(_doubled(i), _doubled(j))

    @property
    def i(self) -> Fraction:
        return Fraction(self.I, 2)

    @property
    def j(self) -> Fraction:
        return Fraction(self.J, 2)

    @property
    def gap(self) -> int:
        """J - I, twice the distance from the main boundary row."""
        return self.J - self.I

    @property
    def is_integer_node(self) -> bool:
        return self.I % 2 == 0 and self.J % 2 == 0

    @property
    def is_midpoint(self) -> bool:
        return (self.I + self.J) % 2 == 1

    def shifted(self, di: int, dj: int) -> "FriezeIndex":
        """Shift by doubled offsets."""
        return FriezeIndex(self.I + di, self.J + dj)

    def translated(self, k: int) -> "FriezeIndex":
        """Translation by (k, k)."""
        return FriezeIndex(self.I + 2 * k, self.J + 2 * k)

    def as_tuple(self) -> Tuple[int, int]:
        return (self.I, self.J)

    def __str__(self) -> str:
        return f"({format_rational(self.i)}, {format_rational(self.j)})"


def glide_image(idx: FriezeIndex, n: int) -> FriezeIndex:
    """(i, j) -> (j, i + n); applied twice it translates by (n, n)."""
    return FriezeIndex(idx.J, idx.I + 2 * n)
