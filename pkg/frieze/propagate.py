"""
Frieze propagation from traversing paths (Heronian) and thickened paths
(Cayley-Menger), depth by depth to a fixpoint
"""

import logging
import random
from typing import Dict, List, Optional, Tuple

from diamond import (
    CayleyMengerDiamond,
    DegeneratePattern,
    Side,
    coherence_solve,
    is_degenerate_diagonal,
    propagate_degenerate,
    propagate_lr,
    propagate_rl,
    require_diagonal,
)
from errors import CoherencePivotZero, DegenerateDiagonal, InterlockMismatch, MalformedPath
from numeric import DEFAULT_POLICY, TolerancePolicy, near_equal

from .index import FriezeIndex, residue
from .model import (
    Frieze,
    FriezeKind,
    Window,
    boundary_values,
    check_window,
    diamond_positions,
    diamond_slots,
    window_indices,
    window_lines,
)
from .paths import ThickenedPath, TraversingPath

logger = logging.getLogger(__name__)

LEFT_HALF = ("a", "c", "e", "p", "q")
RIGHT_HALF = ("a", "c", "f", "r", "s")
Action = Tuple[Tuple[int, int], str]


def _path_window(rows: Tuple[int, int], n: int, window: Optional[Window]) -> Window:
    lo_row, hi_row = rows
    if window is None:
        window = (lo_row, lo_row + n)
    window = check_window(n, window)
    if not (window[0] <= lo_row and hi_row <= window[1]):
        raise MalformedPath(f"Path rows {rows} are not inside window {window}")
    return window


def _lines(n: int, window: Window, sides: Dict[int, object]) -> Tuple[Dict[int, object], Dict[int, object]]:
    ne_range, se_range = window_lines(n, window)
    return (
        {i: sides[residue(i, n)] for i in ne_range},
        {j: sides[residue(j, n)] for j in se_range},
    )


def _seed(kind: FriezeKind, n: int, window: Window, items: Dict[FriezeIndex, object], sides, policy) -> Dict[FriezeIndex, object]:
    sample = next(iter(items.values()))
    known = boundary_values(kind, n, window, lambda r: sides[r], 0 * sample)
    for idx, value in items.items():
        if idx in known and not near_equal(known[idx], value, policy):
            raise MalformedPath(f"Path value {value} contradicts the boundary value {known[idx]}", index=idx)
        known[idx] = value
    return known


def _order(ready: List, shuffle: Optional[random.Random]) -> List:
    if shuffle is not None:
        shuffle.shuffle(ready)
    return ready


def _finish(
    kind: FriezeKind,
    n: int,
    K,
    window: Window,
    known: Dict[FriezeIndex, object],
    ne_lines,
    se_lines,
) -> Frieze:
    missing = [idx for idx in window_indices(kind, n, window) if idx not in known]
    if missing:
        raise MalformedPath(f"Propagation left {len(missing)} entries undetermined", index=missing[0])
    nodes = {idx: known[idx] for idx in window_indices(kind, n, window)}
    return Frieze(kind=kind, n=n, K=K, window=window, nodes=nodes, ne_lines=ne_lines, se_lines=se_lines)


def _heronian_action(
    i: int, j: int, n: int, known: Dict[FriezeIndex, object]
) -> Optional[str]:
    slots = diamond_slots(i, j, FriezeKind.HERONIAN)
    have = {name for name, idx in slots.items() if idx in known}
    if have == set(slots):
        return None
    gap = j - i
    if gap == 1:
        if "a" in have and ({"q", "r"} & have):
            return "cps"
        return None
    if gap == n - 1:
        if "c" in have and ({"p", "s"} & have):
            return "aqr"
        return None
    if set(LEFT_HALF) <= have:
        return "lr"
    if set(RIGHT_HALF) <= have:
        return "rl"
    return None


def _apply_heronian(
    i: int,
    j: int,
    action: str,
    known: Dict[FriezeIndex, object],
    ne_lines,
    se_lines,
    K,
    check: bool,
    policy: TolerancePolicy,
) -> None:
    slots = diamond_slots(i, j, FriezeKind.HERONIAN)
    values = {name: known[idx] for name, idx in slots.items() if idx in known}
    values["b"] = ne_lines[i]
    values["d"] = se_lines[j]
    corner = FriezeIndex(2 * i, 2 * j)

    if action in ("cps", "aqr"):
        pattern = DegeneratePattern.CPS if action == "cps" else DegeneratePattern.AQR
        computed = propagate_degenerate(pattern, values, K, check=check, policy=policy).as_dict()
    elif action == "lr":
        if check:
            require_diagonal(values["e"], K, policy, name="e", index=corner)
        f, r, s = propagate_lr(
            values["a"], values["b"], values["c"], values["d"], values["e"], values["p"], values["q"],
            K, check=check, policy=policy,
        )
        computed = {"f": f, "r": r, "s": s}
    else:
        if check:
            require_diagonal(values["f"], K, policy, name="f", index=slots["f"])
        e, p, q = propagate_rl(
            values["a"], values["b"], values["c"], values["d"], values["f"], values["r"], values["s"],
            K, check=check, policy=policy,
        )
        computed = {"e": e, "p": p, "q": q}

    for name, value in computed.items():
        idx = slots.get(name)
        if idx is not None and idx not in known:
            known[idx] = value


def frieze_from_path(
    path: TraversingPath,
    K,
    window: Optional[Window] = None,
    check: bool = True,
    validate: bool = True,
    shuffle_seed: Optional[int] = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> Frieze:
    """
    The unique Heronian frieze agreeing with a traversing path

    Diamonds are completed in rounds: each round computes every diamond that
    has a full half known at the start of the round. Interior diamonds use the
    left-to-right or right-to-left formulas; the two boundary diamonds of each
    row use the degenerate rules.

    Args:
        path: Heronian path with values on nodes, midpoints and crossed lines
        K: Curvature
        window: Base rows (lo, hi); must contain the path's rows
        check: Verify diagonals and Heron conditions while propagating
        validate: Run frieze_validate on the result and mark it validated
        shuffle_seed: Compute each round's diamonds in a shuffled order

    Raises:
        DegenerateDiagonal: An interior entry hit 0 or 4/K, with its index
        HeronViolation: Path midpoints inconsistent with its distances
        MalformedPath: Path values contradict the boundary or leave gaps
    """
    if path.kind is not FriezeKind.HERONIAN:
        raise MalformedPath("Heronian propagation needs a Heronian path")
    n = path.n
    window = _path_window(path.rows, n, window)
    sides = path.sides()
    ne_lines, se_lines = _lines(n, window, sides)
    known = _seed(FriezeKind.HERONIAN, n, window, path.items(), sides, policy)
    if check:
        for idx, value in path.diagonals():
            if is_degenerate_diagonal(value, K, policy):
                raise DegenerateDiagonal(f"Path diagonal {value} is 0 or 4/K", index=idx)

    shuffle = random.Random(shuffle_seed) if shuffle_seed is not None else None
    positions = diamond_positions(n, window)
    depth = 0
    while True:
        ready: List[Action] = []
        for i, j in positions:
            action = _heronian_action(i, j, n, known)
            if action is not None:
                ready.append(((i, j), action))
        if not ready:
            break
        depth += 1
        for (i, j), action in _order(ready, shuffle):
            _apply_heronian(i, j, action, known, ne_lines, se_lines, K, check, policy)
        logger.debug(f"Depth {depth}: completed {len(ready)} diamonds")

    z = _finish(FriezeKind.HERONIAN, n, K, window, known, ne_lines, se_lines)
    logger.info(f"Propagated Heronian frieze n={n} window={window} in {depth} rounds")
    return _validated(z, validate, policy)


def _block(i: int, j: int) -> Dict[Tuple[int, int], FriezeIndex]:
    return {(di, dj): FriezeIndex(2 * (i + di), 2 * (j + dj)) for di in (-1, 0, 1) for dj in (-1, 0, 1)}


def _cm(known, block, ne_lines, se_lines, i0: int, j0: int, row: int, col: int) -> CayleyMengerDiamond:
    """Diamond with left corner at block offset (row, col) around center (i0, j0)."""
    return CayleyMengerDiamond(
        a=known[block[(row, col + 1)]],
        b=ne_lines[i0 + row],
        c=known[block[(row + 1, col)]],
        d=se_lines[j0 + col],
        e=known[block[(row, col)]],
        f=known[block[(row + 1, col + 1)]],
    )


def cm_frieze_from_thickened_path(
    tp: ThickenedPath,
    K,
    window: Optional[Window] = None,
    validate: bool = True,
    shuffle_seed: Optional[int] = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> Frieze:
    """
    The unique coherent Cayley-Menger frieze agreeing with a thickened path

    Around each center z(i, j) with 2 <= j - i <= n - 2 the nine entries
    z(i-1..i+1, j-1..j+1) carry four diamonds; when all but z(i-1, j-1) or all
    but z(i+1, j+1) are known, the coherence equation fixes the missing one.

    Raises:
        CoherencePivotZero: A pivot vanished, with the center index
        MalformedPath: Inconsistent path data or undetermined entries
    """
    n = tp.n
    base = tp.base
    rows = (base.end_row, base.start + 1)
    window = _path_window(rows, n, window)
    sides = tp.sides()
    ne_lines, se_lines = _lines(n, window, sides)
    known = _seed(FriezeKind.CAYLEY_MENGER, n, window, tp.items(), sides, policy)

    lo, hi = window
    centers = [
        (i, j) for i in range(lo + 1, hi) for j in range(i + 2, i + n - 1)
    ]
    shuffle = random.Random(shuffle_seed) if shuffle_seed is not None else None
    depth = 0
    while True:
        ready = []
        for i, j in centers:
            block = _block(i, j)
            unknown = [offset for offset, idx in block.items() if idx not in known]
            if unknown == [(-1, -1)]:
                ready.append(((i, j), Side.LEFT))
            elif unknown == [(1, 1)]:
                ready.append(((i, j), Side.RIGHT))
        if not ready:
            break
        depth += 1
        for (i, j), side in _order(ready, shuffle):
            block = _block(i, j)
            target = block[(-1, -1)] if side is Side.LEFT else block[(1, 1)]
            if target in known:
                continue
            top = _cm(known, block, ne_lines, se_lines, i, j, -1, 0)
            bottom = _cm(known, block, ne_lines, se_lines, i, j, 0, -1)
            if side is Side.LEFT:
                given = (top, bottom, _cm(known, block, ne_lines, se_lines, i, j, 0, 0))
            else:
                given = (_cm(known, block, ne_lines, se_lines, i, j, -1, -1), top, bottom)
            try:
                known[target] = coherence_solve(side, given, K, policy)
            except (CoherencePivotZero, InterlockMismatch) as exc:
                raise type(exc)(str(exc), index=FriezeIndex(2 * i, 2 * j)) from exc
        logger.debug(f"Depth {depth}: solved {len(ready)} coherence equations")

    z = _finish(FriezeKind.CAYLEY_MENGER, n, K, window, known, ne_lines, se_lines)
    logger.info(f"Propagated Cayley-Menger frieze n={n} window={window} in {depth} rounds")
    return _validated(z, validate, policy)


def _validated(z: Frieze, validate: bool, policy: TolerancePolicy) -> Frieze:
    if not validate:
        return z
    from .validate import frieze_validate

    report = frieze_validate(z, policy)
    if not report.passed:
        first = report.failures()[0]
        raise InterlockMismatch(f"Propagated frieze fails {first.check}: {first.detail}", index=first.index)
    return z.with_validated()
