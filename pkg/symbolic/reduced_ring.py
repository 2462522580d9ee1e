"""
Sparse polynomials over QQ in x- and p-variables, with p^2 reduced to a Heron polynomial
"""

from enum import Enum
from fractions import Fraction
from heapq import heapify, heappop, heappush
from itertools import combinations
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, xring

from errors import DomainError

Monomial = Tuple[int, ...]

# failed (numerator, divisor) attempts remembered per ring
FAILED_CACHE_SIZE = 1024
# above this many p-variables the subset table is not built
MAX_GRADED_TRIANGLES = 16


class PolyOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


def to_qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class ReducedRing:
    """
    QQ[x..., p...] modulo p_T^2 = H^K(x_u, x_v, x_w) for every triangle T

    Generators are ordered x-variables first, then p-variables, under
    graded lexicographic order. Every product is reduced, so p exponents
    stay in {0, 1} and each residue class has one representative.

    For K != 0, give x weight 2 and p_T weight 3. The top-weight part of
    p_T^2 is then -K x_u x_v x_w, and a monomial is tracked by its
    signature: twice its x exponents plus one per edge of each p_T it
    contains. When the edge parities of distinct triangle sets differ,
    signatures are injective and add under multiplication, so division
    runs as plain long division on signature-leading terms.
    """

    def __init__(
        self,
        x_names: Sequence[str],
        triangles: Optional[Mapping[str, Tuple[str, str, str]]] = None,
        K=0,
    ):
        triangles = dict(triangles or {})
        x_names = list(x_names)
        missing = {name for edges in triangles.values() for name in edges} - set(x_names)
        if missing:
            raise DomainError(f"Triangle edges {sorted(missing)} are not ring variables")
        self.K = Fraction(K)
        self.names: List[str] = x_names + sorted(triangles)
        if len(set(self.names)) != len(self.names):
            raise DomainError("Ring variable names must be distinct")
        self.ring, gens = xring(self.names, QQ, grlex)
        self.gens: Dict[str, PolyElement] = dict(zip(self.names, gens))
        self.p_positions: List[int] = [self.names.index(name) for name in sorted(triangles)]
        self._heron: Dict[int, PolyElement] = {
            self.names.index(name): self.heron(*(self.gens[e] for e in edges))
            for name, edges in triangles.items()
        }
        self._powers: Dict[Tuple[int, int], PolyElement] = {}

        self._x_count = len(x_names)
        self._p_edges: Dict[int, Tuple[int, ...]] = {
            self.names.index(name): tuple(self.names.index(e) for e in edges)
            for name, edges in triangles.items()
        }
        self._subsets = self._parity_table() if self.K else None
        self._heron_terms: Dict[Tuple[int, ...], List[Tuple[Monomial, object]]] = {}
        self._failed: Set[Tuple[PolyElement, PolyElement]] = set()

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @property
    def zero(self) -> PolyElement:
        return self.ring.zero

    @property
    def one(self) -> PolyElement:
        return self.ring.one

    def variable(self, name: str) -> PolyElement:
        try:
            return self.gens[name]
        except KeyError:
            raise DomainError(f"Unknown ring variable {name!r}") from None

    def constant(self, value) -> PolyElement:
        return self.ring.ground_new(to_qq(value))

    def heron(self, a: PolyElement, b: PolyElement, c: PolyElement) -> PolyElement:
        K = to_qq(self.K)
        return -a**2 - b**2 - c**2 + 2 * a * b + 2 * a * c + 2 * b * c - a * b * c * K

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _heron_power(self, position: int, exponent: int) -> PolyElement:
        key = (position, exponent)
        if key not in self._powers:
            self._powers[key] = self._heron[position] ** exponent
        return self._powers[key]

    def reduce(self, poly: PolyElement) -> PolyElement:
        """Replace every p^2 by its Heron polynomial."""
        if not self.p_positions:
            return poly
        groups: Dict[Tuple[int, ...], Dict[tuple, object]] = {}
        for monom, coeff in poly.iterterms():
            halves = tuple(monom[k] // 2 for k in self.p_positions)
            base = list(monom)
            for k in self.p_positions:
                base[k] %= 2
            group = groups.setdefault(halves, {})
            base = tuple(base)
            group[base] = group.get(base, self.ring.domain.zero) + coeff
        result = self.ring.zero
        for halves, terms in groups.items():
            part = self.ring.from_dict(terms)
            for k, half in zip(self.p_positions, halves):
                if half:
                    part = part * self._heron_power(k, half)
            result += part
        return result

    def poly_arith(self, op: PolyOp, a: PolyElement, b: PolyElement) -> PolyElement:
        op = PolyOp(op)
        if op is PolyOp.ADD:
            return a + b
        if op is PolyOp.SUB:
            return a - b
        return self.reduce(a * b)

    def mul(self, a: PolyElement, b: PolyElement) -> PolyElement:
        return self.reduce(a * b)

    def conjugate(self, poly: PolyElement, position: int) -> PolyElement:
        """Flip the sign of the p-variable at `position`."""
        return self.ring.from_dict(
            {monom: (-coeff if monom[position] % 2 else coeff) for monom, coeff in poly.iterterms()}
        )

    def exact_divide(self, num: PolyElement, div: PolyElement) -> Optional[PolyElement]:
        """
        num / div in the reduced ring, or None when div does not divide num

        With K != 0 this is long division on signature-leading terms. At
        K = 0, or when triangle signatures collide, each p-variable of div
        is eliminated by multiplying both sides by the conjugate, since
        (A + pB)(A - pB) = A^2 - H B^2.

        Raises:
            ZeroDivisionError: div is the zero polynomial
        """
        if not div:
            raise ZeroDivisionError("Division by the zero polynomial")
        if not num:
            return self.zero
        if not self.p_positions:
            return _exquo(num, div)
        attempt = (num, div)
        if attempt in self._failed:
            return None
        if self._subsets is not None:
            quotient = self._long_divide(self._normal(num), self._normal(div))
        else:
            quotient = self._conjugate_divide(num, div)
        if quotient is None:
            if len(self._failed) >= FAILED_CACHE_SIZE:
                self._failed.clear()
            self._failed.add(attempt)
        return quotient

    def _normal(self, poly: PolyElement) -> PolyElement:
        if any(monom[k] > 1 for monom in poly.itermonoms() for k in self.p_positions):
            return self.reduce(poly)
        return poly

    def _conjugate_divide(self, num: PolyElement, div: PolyElement) -> Optional[PolyElement]:
        # at K = 0 the ring is graded by total degree and has no zero divisors
        if not self.K and total_degree(num) < total_degree(div):
            return None
        for k in self.p_positions:
            if any(monom[k] for monom in div.itermonoms()):
                conj = self.conjugate(div, k)
                num = self.mul(num, conj)
                div = self.mul(div, conj)
        return _exquo(num, div)

    # ------------------------------------------------------------------
    # Signature long division
    # ------------------------------------------------------------------

    def _parity_table(self) -> Optional[Dict[int, Tuple[int, ...]]]:
        """p-variable subsets keyed by the odd edges of their product; None on a collision."""
        if len(self.p_positions) > MAX_GRADED_TRIANGLES:
            return None
        parity = {}
        for k, edges in self._p_edges.items():
            mask = 0
            for i in edges:
                mask ^= 1 << i
            parity[k] = mask
        table: Dict[int, Tuple[int, ...]] = {}
        for size in range(len(self.p_positions) + 1):
            for subset in combinations(self.p_positions, size):
                mask = 0
                for k in subset:
                    mask ^= parity[k]
                if mask in table:
                    return None
                table[mask] = subset
        return table

    def _signature(self, monom: Monomial) -> Tuple[int, ...]:
        sig = [2 * e for e in monom[: self._x_count]]
        for k, edges in self._p_edges.items():
            if monom[k]:
                for i in edges:
                    sig[i] += 1
        return tuple(sig)

    def _heap_key(self, monom: Monomial):
        # heapq pops the smallest, so negate graded-lex on the signature
        sig = self._signature(monom)
        return (-sum(sig), tuple(-s for s in sig), monom)

    def _cofactor(self, sig: Tuple[int, ...], lead_sig: Tuple[int, ...], lead: Monomial) -> Optional[Tuple[Monomial, int]]:
        """The monomial t with sig(t) + lead_sig == sig, and how many p-variables t shares with lead."""
        delta = [a - b for a, b in zip(sig, lead_sig)]
        mask = 0
        for i, d in enumerate(delta):
            if d < 0:
                return None
            if d % 2:
                mask |= 1 << i
        subset = self._subsets.get(mask)
        if subset is None:
            return None
        for k in subset:
            for i in self._p_edges[k]:
                delta[i] -= 1
        if min(delta) < 0:
            return None
        monom = [d // 2 for d in delta] + [0] * len(self.p_positions)
        for k in subset:
            monom[k] = 1
        return tuple(monom), sum(1 for k in subset if lead[k])

    def _heron_product(self, positions: Tuple[int, ...]) -> List[Tuple[Monomial, object]]:
        if positions not in self._heron_terms:
            product = self.ring.one
            for k in positions:
                product = product * self._heron[k]
            self._heron_terms[positions] = list(product.iterterms())
        return self._heron_terms[positions]

    def _scaled_terms(self, monom: Monomial, coeff, poly: PolyElement) -> Iterator[Tuple[Monomial, object]]:
        """Terms of coeff * x^monom * poly after reduction, possibly repeated."""
        for other, value in poly.iterterms():
            base = [a + b for a, b in zip(monom, other)]
            value = coeff * value
            squared = tuple(k for k in self.p_positions if base[k] == 2)
            if not squared:
                yield tuple(base), value
                continue
            for k in squared:
                base[k] = 0
            for h_monom, h_value in self._heron_product(squared):
                yield tuple(a + b for a, b in zip(base, h_monom)), value * h_value

    def _long_divide(self, num: PolyElement, div: PolyElement) -> Optional[PolyElement]:
        lead = min(div.itermonoms(), key=self._heap_key)
        lead_sig = self._signature(lead)
        lead_coeff = div[lead]
        minus_k = to_qq(-self.K)

        rest = dict(num.iterterms())
        heap = [self._heap_key(monom) for monom in rest]
        heapify(heap)
        quotient = {}
        while heap:
            monom = heappop(heap)[-1]
            coeff = rest.get(monom)
            if coeff is None:
                continue
            cofactor = self._cofactor(self._signature(monom), lead_sig, lead)
            if cofactor is None:
                return None
            t, shared = cofactor
            t_coeff = coeff / (lead_coeff * minus_k**shared)
            quotient[t] = t_coeff
            for m, value in self._scaled_terms(t, t_coeff, div):
                if m in rest:
                    left = rest[m] - value
                    if left:
                        rest[m] = left
                    else:
                        del rest[m]
                else:
                    rest[m] = -value
                    heappush(heap, self._heap_key(m))
        return self.ring.from_dict(quotient)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    def is_constant(self, poly: PolyElement) -> bool:
        return poly.is_ground

    def constant_term(self, poly: PolyElement):
        return poly.get(self.ring.zero_monom, self.ring.domain.zero)

    def evaluate(self, poly: PolyElement, values: Mapping[str, Fraction]) -> Fraction:
        """Substitute exact values for every variable."""
        point = []
        for name in self.names:
            if name not in values:
                raise DomainError(f"No value for ring variable {name!r}")
            point.append(Fraction(values[name]))
        total = Fraction(0)
        for monom, coeff in poly.iterterms():
            term = from_qq(coeff)
            for value, exponent in zip(point, monom):
                if exponent:
                    term *= value**exponent
            total += term
        return total


def _exquo(num: PolyElement, div: PolyElement) -> Optional[PolyElement]:
    try:
        return num.exquo(div)
    except ExactQuotientFailed:
        return None


def total_degree(poly: PolyElement) -> int:
    return max((sum(monom) for monom in poly.itermonoms()), default=0)
