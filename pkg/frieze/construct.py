"""
Friezes from polygons, and conversion between the two frieze kinds
"""

import logging
from functools import lru_cache
from typing import Optional, Sequence

from diamond import heron_K, is_degenerate_diagonal, lift, parse_sign, restrict
from errors import DegenerateDiagonal, DomainError, InterlockMismatch
from geometry import SpherePoint, points_config, s_kappa, sq_dist
from numeric import DEFAULT_POLICY, TolerancePolicy, near_equal, sqrt_scalar

from .index import FriezeIndex, residue
from .model import Frieze, FriezeKind, Window, build_frieze, default_window
from .paths import TraversingPath, vertical_shape
from .propagate import frieze_from_path

logger = logging.getLogger(__name__)


def frieze_from_polygon(
    points: Sequence[SpherePoint],
    kind=FriezeKind.HERONIAN,
    window: Optional[Window] = None,
) -> Frieze:
    """
    Frieze of a spherical n-gon

    Integer node (i, j) holds x_<i><j>; midpoint (i, j+1/2) holds
    S_<i><j><j+1> and (i+1/2, j) holds S_<i><i+1><j>. Lines hold the sides.

    Raises:
        ExactSqrtUnavailable: Heronian kind with points in a frame whose
            volume factor is irrational
    """
    kind = FriezeKind.parse(kind)
    n = len(points)
    if n < 4:
        raise DomainError(f"Friezes need at least 4 vertices, got {n}")
    config = points_config(points)
    window = default_window(n) if window is None else window

    @lru_cache(maxsize=None)
    def x(u: int, v: int):
        return sq_dist(points[u - 1], points[v - 1])

    @lru_cache(maxsize=None)
    def S(u: int, v: int, w: int):
        return s_kappa(points[u - 1], points[v - 1], points[w - 1])

    def value(idx: FriezeIndex):
        if idx.is_integer_node:
            return x(residue(idx.I // 2, n), residue(idx.J // 2, n))
        if idx.I % 2:
            i = (idx.I - 1) // 2
            return S(residue(i, n), residue(i + 1, n), residue(idx.J // 2, n))
        j = (idx.J - 1) // 2
        return S(residue(idx.I // 2, n), residue(j, n), residue(j + 1, n))

    z = build_frieze(kind, n, config.K, window, value, lambda r: x(r, residue(r + 1, n)))
    logger.info(f"Built {kind.value} frieze of a {n}-gon over window {z.window}")
    return z


def _require_interior(z: Frieze, policy: TolerancePolicy) -> None:
    for idx, value in z.integer_nodes().items():
        if 4 <= idx.gap <= 2 * z.n - 4 and is_degenerate_diagonal(value, z.K, policy):
            raise DegenerateDiagonal(f"Interior entry {value} is 0 or 4/K", index=idx)


def frieze_restrict(z: Frieze, policy: TolerancePolicy = DEFAULT_POLICY) -> Frieze:
    """
    Forget the midpoints of a Heronian frieze

    Every diamond is restricted individually, which checks M^K_4 = 0 and the
    six midpoint product identities.

    Raises:
        DegenerateDiagonal: An interior integer entry is 0 or 4/K
        PreconditionViolation: A diamond does not restrict
    """
    if z.kind is not FriezeKind.HERONIAN:
        raise DomainError("Only Heronian friezes restrict")
    _require_interior(z, policy)
    for i, j in z.diamond_positions():
        restrict(z.heronian_diamond(i, j), z.K, policy)
    return Frieze(
        kind=FriezeKind.CAYLEY_MENGER,
        n=z.n,
        K=z.K,
        window=z.window,
        nodes=z.integer_nodes(),
        ne_lines=dict(z.ne_lines),
        se_lines=dict(z.se_lines),
        validated=z.validated,
    )


def frieze_lift(
    z: Frieze,
    sign,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> Frieze:
    """
    One of the two Heronian friezes restricting to a coherent Cayley-Menger frieze

    `sign` is the sign of the entry at (lo+1/2, lo+2), whose square is
    H^K(NE(lo), z(lo+1, lo+2), z(lo, lo+2)). The diamonds of row lo are lifted
    in a chain, each passing its r to the next as p; the Heronian path along
    row lo then propagates to the whole window.

    Raises:
        ExactSqrtUnavailable: The seed is not a rational square in exact mode
        PreconditionViolation: A diamond of row lo cannot be lifted
        InterlockMismatch: The lifted frieze does not restrict back to z
    """
    if z.kind is not FriezeKind.CAYLEY_MENGER:
        raise DomainError("Only Cayley-Menger friezes lift")
    n, K = z.n, z.K
    lo, hi = z.window
    if hi - lo < 1:
        raise DomainError("Lifting needs a window of at least two rows")
    _require_interior(z, policy)

    def node(i: int, j: int):
        return z.lookup(FriezeIndex(2 * i, 2 * j))

    seed_heron = heron_K(z.ne(lo), node(lo + 1, lo + 2), node(lo, lo + 2), K)
    p = parse_sign(sign) * sqrt_scalar(seed_heron, what="seed H^K")

    midpoints = [p]
    for j in range(lo + 2, lo + n - 1):
        lifted = lift(z.cm_diamond(lo, j), K, p=p, policy=policy)
        midpoints.append(lifted.q)
        p = lifted.r

    values = []
    for step, j in enumerate(range(lo + 1, lo + n)):
        values.append(node(lo, j))
        if step < n - 2:
            values.append(midpoints[step])
    path = TraversingPath(
        n=n,
        start=lo,
        shape=vertical_shape(n),
        values=values,
        lines=[z.se(j) for j in range(lo + 1, lo + n - 1)],
    )
    lifted = frieze_from_path(path, K, window=z.window, policy=policy)
    for idx, value in z.nodes.items():
        if not near_equal(lifted.nodes[idx], value, policy):
            raise InterlockMismatch(f"Lifted frieze disagrees: {lifted.nodes[idx]} != {value}", index=idx)
    logger.info(f"Lifted Cayley-Menger frieze n={n} with seed sign {sign}")
    return lifted


def negate_midpoints(z: Frieze) -> Frieze:
    """The other Heronian frieze with the same integer entries."""
    if z.kind is not FriezeKind.HERONIAN:
        raise DomainError("Only Heronian friezes have midpoints")
    nodes = {idx: (-v if idx.is_midpoint else v) for idx, v in z.nodes.items()}
    return Frieze(
        kind=z.kind, n=z.n, K=z.K, window=z.window, nodes=nodes,
        ne_lines=dict(z.ne_lines), se_lines=dict(z.se_lines), validated=z.validated,
    )
