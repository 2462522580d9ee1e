"""
Windowed frieze container shared by both frieze kinds
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from diamond import CayleyMengerDiamond, HeronianDiamond
from errors import DomainError, IndexOutsideWindow

from .index import FriezeIndex, glide_image, residue

logger = logging.getLogger(__name__)

Window = Tuple[int, int]


class FriezeKind(str, Enum):
    HERONIAN = "heronian"
    CAYLEY_MENGER = "cayley_menger"

    @classmethod
    def parse(cls, value) -> "FriezeKind":
        text = str(getattr(value, "value", value)).strip().lower().replace("-", "_")
        if text in ("cm", "cayley_menger"):
            return cls.CAYLEY_MENGER
        if text in ("heronian", "heron", "h"):
            return cls.HERONIAN
        raise DomainError(f"Unknown frieze kind {value!r}")


# doubled offsets from (2i, 2j) of the diamond with left corner z(i, j)
HERONIAN_SLOTS: Dict[str, Tuple[int, int]] = {
    "e": (0, 0),
    "a": (0, 2),
    "c": (2, 0),
    "f": (2, 2),
    "p": (1, 0),
    "q": (0, 1),
    "r": (1, 2),
    "s": (2, 1),
}
CM_SLOTS: Dict[str, Tuple[int, int]] = {name: HERONIAN_SLOTS[name] for name in ("e", "a", "c", "f")}


def diamond_slots(i: int, j: int, kind: FriezeKind) -> Dict[str, FriezeIndex]:
    slots = HERONIAN_SLOTS if kind is FriezeKind.HERONIAN else CM_SLOTS
    return {name: FriezeIndex(2 * i + di, 2 * j + dj) for name, (di, dj) in slots.items()}


def check_window(n: int, window: Window) -> Window:
    if n < 4:
        raise DomainError(f"Friezes need order n >= 4, got {n}")
    lo, hi = window
    if lo > hi:
        raise DomainError(f"Empty window {window}")
    return (int(lo), int(hi))


def window_indices(kind: FriezeKind, n: int, window: Window) -> Iterator[FriezeIndex]:
    """Every stored index: base rows 2lo <= I <= 2hi and 0 <= J - I <= 2n."""
    lo, hi = window
    for I in range(2 * lo, 2 * hi + 1):
        if I % 2 and kind is FriezeKind.CAYLEY_MENGER:
            continue
        for J in range(I, I + 2 * n + 1):
            if kind is FriezeKind.CAYLEY_MENGER and J % 2:
                continue
            if I % 2 and J % 2:
                continue
            yield FriezeIndex(I, J)


def window_lines(n: int, window: Window) -> Tuple[range, range]:
    """NE lines over the base rows, SE lines over every column a window diamond reaches."""
    lo, hi = window
    return range(lo, hi + 1), range(lo, hi + n + 1)


def diamond_positions(n: int, window: Window) -> List[Tuple[int, int]]:
    """Diamonds with left corner z(i, j), lo <= i < hi and 1 <= j - i <= n - 1."""
    lo, hi = window
    return [(i, j) for i in range(lo, hi) for j in range(i + 1, i + n)]


def boundary_values(
    kind: FriezeKind,
    n: int,
    window: Window,
    side: Callable[[int], object],
    zero,
) -> Dict[FriezeIndex, object]:
    """
    Entries fixed by the boundary rules

    side(r) is x_{r, r+1} for a residue r.
    """
    out = {}
    for idx in window_indices(kind, n, window):
        gap = idx.gap
        if gap in (0, 2 * n) or (kind is FriezeKind.HERONIAN and gap in (1, 2 * n - 1)):
            out[idx] = zero
        elif gap == 2 and idx.is_integer_node:
            out[idx] = side(residue(idx.I // 2, n))
        elif gap == 2 * n - 2 and idx.is_integer_node:
            out[idx] = side(residue(idx.I // 2 - 1, n))
    return out


@dataclass(frozen=True)
class Frieze:
    """
    A frieze materialized over base rows lo..hi

    `nodes` maps every stored index to its value; NE line i and SE line j are
    kept in separate maps. Lookups outside the window go through periodicity
    and glide symmetry once the frieze is marked validated.
    """

    kind: FriezeKind
    n: int
    K: object
    window: Window
    nodes: Mapping[FriezeIndex, object]
    ne_lines: Mapping[int, object]
    se_lines: Mapping[int, object]
    validated: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", FriezeKind.parse(self.kind))
        object.__setattr__(self, "window", check_window(self.n, self.window))

    def __getitem__(self, idx: FriezeIndex):
        return self.lookup(idx)

    def __contains__(self, idx: FriezeIndex) -> bool:
        return idx in self.nodes

    def value(self, i, j):
        """Entry at half-integer coordinates (i, j)."""
        return self.lookup(FriezeIndex.node(i, j))

    def indices(self) -> List[FriezeIndex]:
        return list(window_indices(self.kind, self.n, self.window))

    def lookup(self, idx: FriezeIndex):
        if idx in self.nodes:
            return self.nodes[idx]
        if not 0 <= idx.gap <= 2 * self.n:
            raise IndexOutsideWindow(f"Index {idx} is outside the frieze strip")
        if not self.validated:
            raise IndexOutsideWindow(f"Index {idx} is outside window {self.window}")
        lo = self.window[0]
        period = 2 * self.n
        for base in (idx, glide_image(idx, self.n)):
            shift = -((base.I - 2 * lo) // period)
            for extra in (0, 1):
                candidate = base.shifted(period * (shift + extra), period * (shift + extra))
                if candidate in self.nodes:
                    return self.nodes[candidate]
        raise IndexOutsideWindow(f"Index {idx} has no image in window {self.window}")

    def _line(self, lines: Mapping[int, object], k: int):
        if k in lines:
            return lines[k]
        if self.validated:
            for other in (self.ne_lines, self.se_lines):
                for key in other:
                    if (key - k) % self.n == 0:
                        return other[key]
        raise IndexOutsideWindow(f"Line {k} is outside window {self.window}")

    def ne(self, i: int):
        return self._line(self.ne_lines, i)

    def se(self, j: int):
        return self._line(self.se_lines, j)

    def diamond_positions(self) -> List[Tuple[int, int]]:
        return diamond_positions(self.n, self.window)

    def heronian_diamond(self, i: int, j: int) -> HeronianDiamond:
        if self.kind is not FriezeKind.HERONIAN:
            raise DomainError("Cayley-Menger friezes carry no midpoints")
        values = {name: self.lookup(idx) for name, idx in diamond_slots(i, j, self.kind).items()}
        return HeronianDiamond(b=self.ne(i), d=self.se(j), **values)

    def cm_diamond(self, i: int, j: int) -> CayleyMengerDiamond:
        values = {name: self.lookup(idx) for name, idx in diamond_slots(i, j, FriezeKind.CAYLEY_MENGER).items()}
        return CayleyMengerDiamond(b=self.ne(i), d=self.se(j), **values)

    def integer_nodes(self) -> Dict[FriezeIndex, object]:
        return {idx: v for idx, v in self.nodes.items() if idx.is_integer_node}

    def midpoints(self) -> Dict[FriezeIndex, object]:
        return {idx: v for idx, v in self.nodes.items() if idx.is_midpoint}

    def translated(self, k: int) -> "Frieze":
        """Same values with every index moved by (k, k)."""
        lo, hi = self.window
        return replace(
            self,
            window=(lo + k, hi + k),
            nodes={idx.translated(k): v for idx, v in self.nodes.items()},
            ne_lines={i + k: v for i, v in self.ne_lines.items()},
            se_lines={j + k: v for j, v in self.se_lines.items()},
        )

    def with_validated(self, validated: bool = True) -> "Frieze":
        return replace(self, validated=validated)

    def same_entries(self, other: "Frieze") -> bool:
        return (
            self.kind == other.kind
            and self.n == other.n
            and dict(self.nodes) == dict(other.nodes)
            and dict(self.ne_lines) == dict(other.ne_lines)
            and dict(self.se_lines) == dict(other.se_lines)
        )


def build_frieze(
    kind: FriezeKind,
    n: int,
    K,
    window: Window,
    value: Callable[[FriezeIndex], object],
    side: Callable[[int], object],
) -> Frieze:
    """Fill a window from an entry function and the side values by residue."""
    window = check_window(n, window)
    ne_range, se_range = window_lines(n, window)
    nodes = {idx: value(idx) for idx in window_indices(kind, n, window)}
    logger.debug(f"Built {kind.value} frieze n={n} window={window} with {len(nodes)} entries")
    return Frieze(
        kind=kind,
        n=n,
        K=K,
        window=window,
        nodes=nodes,
        ne_lines={i: side(residue(i, n)) for i in ne_range},
        se_lines={j: side(residue(j, n)) for j in se_range},
    )


def default_window(n: int, row: Optional[int] = None) -> Window:
    start = 0 if row is None else row
    return (start, start + n)
