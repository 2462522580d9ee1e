"""
Itemized frieze validation: boundary, lines, diamonds, periodicity, glide
symmetry and (Cayley-Menger kind) coherence
"""

from dataclasses import dataclass, field
from typing import List, Optional

from diamond import cm_check, coherence_check, heronian_check
from errors import FriezeError
from numeric import DEFAULT_POLICY, TolerancePolicy, is_zero, near_equal

from .index import FriezeIndex, glide_image
from .model import Frieze, FriezeKind, boundary_values


@dataclass(frozen=True)
class ValidationItem:
    check: str
    index: Optional[str]
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"check": self.check, "index": self.index, "passed": self.passed, "detail": self.detail}


@dataclass
class FriezeReport:
    kind: str
    n: int
    items: List[ValidationItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def failures(self) -> List[ValidationItem]:
        return [item for item in self.items if not item.passed]

    def add(self, check: str, index, passed: bool, detail: str = "") -> None:
        self.items.append(
            ValidationItem(check=check, index=None if index is None else str(index), passed=bool(passed), detail=detail)
        )

    def counts(self) -> dict:
        out = {}
        for item in self.items:
            total, ok = out.get(item.check, (0, 0))
            out[item.check] = (total + 1, ok + int(item.passed))
        return out


def _check_boundary(z: Frieze, report: FriezeReport, policy: TolerancePolicy) -> None:
    lo, hi = z.window
    zero = 0 * z.K
    expected = boundary_values(z.kind, z.n, z.window, lambda r: None, zero)
    for idx, value in expected.items():
        actual = z.nodes.get(idx)
        if value is None:
            continue
        report.add("boundary", idx, actual is not None and is_zero(actual, policy), f"value {actual}")
    for i in range(lo, hi + 1):
        first = FriezeIndex(2 * i, 2 * i + 2)
        last = FriezeIndex(2 * i, 2 * i + 2 * z.n - 2)
        pairs = [(first, i, i), (last, i - 1, i + z.n - 1)]
        for idx, ne, se in pairs:
            node = z.nodes.get(idx)
            ok = True
            for lines, k in ((z.ne_lines, ne), (z.se_lines, se)):
                if k in lines:
                    ok = ok and node is not None and near_equal(node, lines[k], policy)
            report.add("line", idx, ok, f"node {node}")


def _check_diamonds(z: Frieze, report: FriezeReport, policy: TolerancePolicy) -> None:
    for i, j in z.diamond_positions():
        corner = FriezeIndex(2 * i, 2 * j)
        try:
            if z.kind is FriezeKind.HERONIAN:
                result = heronian_check(z.heronian_diamond(i, j), z.K, policy)
                report.add("diamond", corner, result.passed, ", ".join(sorted(result.failures())))
            else:
                report.add("diamond", corner, cm_check(z.cm_diamond(i, j), z.K, policy))
        except FriezeError as exc:
            report.add("diamond", corner, False, str(exc))


def _check_periodicity(z: Frieze, report: FriezeReport, policy: TolerancePolicy) -> None:
    for idx, value in z.nodes.items():
        image = idx.translated(z.n)
        if image in z.nodes:
            report.add("periodicity", idx, near_equal(value, z.nodes[image], policy))
    for lines in (z.ne_lines, z.se_lines):
        for k, value in lines.items():
            if k + z.n in lines:
                report.add("periodicity", f"line {k}", near_equal(value, lines[k + z.n], policy))


def _check_glide(z: Frieze, report: FriezeReport, policy: TolerancePolicy) -> None:
    for idx, value in z.nodes.items():
        image = glide_image(idx, z.n)
        if image in z.nodes:
            report.add("glide", idx, near_equal(value, z.nodes[image], policy), f"image {image}")


def _check_coherence(z: Frieze, report: FriezeReport, policy: TolerancePolicy) -> None:
    lo, hi = z.window
    for i in range(lo + 1, hi):
        for j in range(i + 2, i + z.n - 1):
            center = FriezeIndex(2 * i, 2 * j)
            try:
                ok = coherence_check(
                    z.cm_diamond(i - 1, j - 1),
                    z.cm_diamond(i - 1, j),
                    z.cm_diamond(i, j - 1),
                    z.cm_diamond(i, j),
                    z.K,
                    policy,
                )
                report.add("coherence", center, ok)
            except FriezeError as exc:
                report.add("coherence", center, False, str(exc))


def frieze_validate(z: Frieze, policy: TolerancePolicy = DEFAULT_POLICY) -> FriezeReport:
    """
    Check every rule a frieze must satisfy within its window

    Returns:
        FriezeReport with one item per boundary entry, line junction,
        diamond, periodic pair, glide pair and (Cayley-Menger kind) center
    """
    report = FriezeReport(kind=z.kind.value, n=z.n)
    _check_boundary(z, report, policy)
    _check_diamonds(z, report, policy)
    _check_periodicity(z, report, policy)
    _check_glide(z, report, policy)
    if z.kind is FriezeKind.CAYLEY_MENGER:
        _check_coherence(z, report, policy)
    return report
