"""
Rational functions with a tracked denominator: a monomial in designated atoms
times a list of residual polynomials
"""

import logging
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from config import SYMBOLIC_MAX_TERMS
from errors import ResourceLimitExceeded

from .reduced_ring import ReducedRing, from_qq, total_degree

logger = logging.getLogger(__name__)

Atom = Tuple[str, PolyElement]


class LaurentField:
    """
    Factory and arithmetic context for TrackedFraction values

    Args:
        ring: Reduced polynomial ring holding numerators
        atoms: (label, polynomial) pairs allowed in denominators
        clear: Greedily divide residual denominators into the numerator
            after every operation
        max_terms: Cap on numerator size
    """

    def __init__(
        self,
        ring: ReducedRing,
        atoms: Sequence[Atom] = (),
        clear: bool = True,
        max_terms: int = SYMBOLIC_MAX_TERMS,
    ):
        self.ring = ring
        self.atoms: List[Atom] = list(atoms)
        self.clear = clear
        self.max_terms = max_terms
        self._atom_powers: Dict[Tuple[int, int], PolyElement] = {}

    def variable(self, name: str) -> "TrackedFraction":
        return TrackedFraction(self, self.ring.variable(name))

    def constant(self, value) -> "TrackedFraction":
        return TrackedFraction(self, self.ring.constant(value))

    @property
    def atom_labels(self) -> List[str]:
        return [label for label, _ in self.atoms]

    def atom_power(self, k: int, exponent: int) -> PolyElement:
        key = (k, exponent)
        if key not in self._atom_powers:
            self._atom_powers[key] = self.atoms[k][1] ** exponent
        return self._atom_powers[key]

    def atom_monomial(self, exponents: Sequence[int]) -> PolyElement:
        out = self.ring.one
        for k, e in enumerate(exponents):
            if e:
                out = out * self.atom_power(k, e)
        return out

    def evaluate(self, entry: "TrackedFraction", values: Mapping[str, Fraction]) -> Fraction:
        """Specialize an entry at exact values of every ring variable."""
        ring = self.ring
        den = ring.evaluate(self.atom_monomial(entry.atoms), values)
        for residual in entry.residuals:
            den *= ring.evaluate(residual, values)
        if den == 0:
            raise ZeroDivisionError("Denominator vanishes at the given values")
        return ring.evaluate(entry.num, values) / den


def _product(ring: ReducedRing, polys: Sequence[PolyElement]) -> PolyElement:
    out = ring.one
    for poly in polys:
        out = ring.mul(out, poly)
    return out


def _split_common(left: Sequence[PolyElement], right: Sequence[PolyElement]):
    rest = list(right)
    common, only_left = [], []
    for poly in left:
        for k, other in enumerate(rest):
            if poly == other:
                common.append(rest.pop(k))
                break
        else:
            only_left.append(poly)
    return common, only_left, rest


class TrackedFraction:
    """
    num / (atom monomial * product of residuals)

    Equality is equality of rational functions; instances are unhashable.
    """

    __slots__ = ("field", "num", "atoms", "residuals")
    __hash__ = None

    def __init__(
        self,
        field: LaurentField,
        num: PolyElement,
        atoms: Optional[Sequence[int]] = None,
        residuals: Sequence[PolyElement] = (),
    ):
        self.field = field
        self.num = num
        self.atoms: Tuple[int, ...] = tuple(atoms) if atoms is not None else (0,) * len(field.atoms)
        self.residuals: Tuple[PolyElement, ...] = tuple(residuals)

    # ------------------------------------------------------------------
    # Canonical bookkeeping
    # ------------------------------------------------------------------

    def _make(self, num: PolyElement, atoms: Sequence[int], residuals: Sequence[PolyElement]) -> "TrackedFraction":
        field = self.field
        if not num:
            return TrackedFraction(field, num)
        if field.clear and residuals:
            remaining = []
            for residual in residuals:
                quotient = field.ring.exact_divide(num, residual)
                if quotient is None:
                    remaining.append(residual)
                else:
                    num = quotient
            if len(remaining) < len(residuals):
                logger.debug(f"Cleared {len(residuals) - len(remaining)} residual denominators")
            residuals = remaining
        if len(num) > field.max_terms:
            raise ResourceLimitExceeded(f"Numerator has {len(num)} terms, cap is {field.max_terms}")
        return TrackedFraction(field, num, atoms, residuals)

    def _coerce(self, other) -> Optional["TrackedFraction"]:
        if isinstance(other, TrackedFraction):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.constant(other)
        return None

    def inverse(self) -> "TrackedFraction":
        """
        1 / self

        Atom factors of the numerator move into the atom monomial and a
        constant is absorbed; whatever remains becomes a residual.
        """
        field = self.field
        ring = field.ring
        if not self.num:
            raise ZeroDivisionError("Division by a zero tracked fraction")
        rest = self.num
        exponents = [0] * len(field.atoms)
        for k, (_, atom) in enumerate(field.atoms):
            while not ring.is_constant(rest):
                quotient = ring.exact_divide(rest, atom)
                if quotient is None:
                    break
                rest = quotient
                exponents[k] += 1
        num = ring.mul(field.atom_monomial(self.atoms), _product(ring, self.residuals))
        if ring.is_constant(rest):
            return self._make(num.quo_ground(ring.constant_term(rest)), exponents, ())
        return self._make(num, exponents, (rest,))

    def normalized(self) -> "TrackedFraction":
        """Cancel atom factors shared by the numerator and the atom monomial."""
        ring = self.field.ring
        num = self.num
        exponents = list(self.atoms)
        for k, (_, atom) in enumerate(self.field.atoms):
            while exponents[k]:
                quotient = ring.exact_divide(num, atom)
                if quotient is None:
                    break
                num = quotient
                exponents[k] -= 1
        return TrackedFraction(self.field, num, exponents, self.residuals)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        field = self.field
        ring = field.ring
        atoms = tuple(max(x, y) for x, y in zip(self.atoms, other.atoms))
        mine = field.atom_monomial([m - x for m, x in zip(atoms, self.atoms)])
        theirs = field.atom_monomial([m - y for m, y in zip(atoms, other.atoms)])
        common, only_mine, only_theirs = _split_common(self.residuals, other.residuals)
        num = ring.mul(ring.mul(self.num, mine), _product(ring, only_theirs)) + ring.mul(
            ring.mul(other.num, theirs), _product(ring, only_mine)
        )
        return self._make(num, atoms, common + only_mine + only_theirs)

    __radd__ = __add__

    def __neg__(self):
        return TrackedFraction(self.field, -self.num, self.atoms, self.residuals)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        num = self.field.ring.mul(self.num, other.num)
        atoms = tuple(x + y for x, y in zip(self.atoms, other.atoms))
        return self._make(num, atoms, self.residuals + other.residuals)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        out = self.field.constant(1)
        for _ in range(abs(exponent)):
            out = out * base
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return not (self - other).num

    # ------------------------------------------------------------------
    # Reporting
    # ------------------------------------------------------------------

    @property
    def is_clean(self) -> bool:
        return not self.residuals

    def atom_exponents(self) -> Dict[str, int]:
        return {label: e for label, e in zip(self.field.atom_labels, self.atoms) if e}

    def residual_degree(self) -> int:
        return max((total_degree(r) for r in self.residuals), default=0)

    def constant_value(self) -> Optional[Fraction]:
        """The value when the fraction is a rational constant, else None."""
        ring = self.field.ring
        if any(self.atoms) or self.residuals or not ring.is_constant(self.num):
            return None
        return from_qq(ring.constant_term(self.num))

    def __repr__(self) -> str:
        den = [f"{label}^{e}" if e > 1 else label for label, e in self.atom_exponents().items()]
        den += [f"({r})" for r in self.residuals]
        if not den:
            return f"({self.num})"
        return f"({self.num}) / ({' * '.join(den)})"

    __str__ = __repr__
