"""
Point placement from two distances and a signed measurement, and realization
of triangulated polygons
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Sequence

from diamond.heron import HeronianDiamond, heron_K, is_degenerate_diagonal
from errors import AntipodalOrCoincident, DomainError, HeronViolation, MalformedTriangulation
from numeric import DEFAULT_POLICY, TolerancePolicy, coerce, near_equal

from .sphere import SphereConfig, SpherePoint, common_frame, frame_volume, s_kappa, sq_dist
from .triangulation import MeasurementSet, Triangulation, measurement_set

logger = logging.getLogger(__name__)


def _frame_cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def place_third_point(
    A: SpherePoint,
    C: SpherePoint,
    a,
    c,
    p,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> SpherePoint:
    """
    The unique B with x(B,C) = a, x(A,B) = c and S^K(A,B,C) = p

    B is written as alpha*A + beta*C plus a multiple of A x C; the first two
    coefficients solve the Gram system, the third is fixed by p.

    Raises:
        AntipodalOrCoincident: If x(A,C) is 0 or 4/K
        HeronViolation: If p^2 != H^K(a, x(A,C), c)
    """
    A, C = common_frame(A, C)
    config = A.config
    R2, K = config.R2, config.K
    a, c, p = coerce(a, c, p)
    b = sq_dist(A, C)
    if is_degenerate_diagonal(b, K, policy):
        raise AntipodalOrCoincident(f"x(A,C) = {b} leaves the third point undetermined")
    h = heron_K(a, b, c, K)
    if not near_equal(p * p, h, policy):
        raise HeronViolation(f"p^2 = {p * p} but H^K(a,b,c) = {h}")

    g = R2 - b / 2
    delta = R2 * R2 - g * g
    h1 = R2 - c / 2
    h2 = R2 - a / 2
    alpha = (R2 * h1 - g * h2) / delta
    beta = (R2 * h2 - g * h1) / delta
    gamma = -p * frame_volume(A.scale2, R2) / (2 * delta)
    cross = _frame_cross(A.vector, C.vector)
    coords = [
        alpha * ak + beta * ck + gamma * nk / sk
        for ak, ck, nk, sk in zip(A.vector, C.vector, cross, A.scale2)
    ]
    return SpherePoint(*coords, config=config, scale2=A.scale2)


def _gauge_pair(x, config: SphereConfig):
    """First two points: (0,0,R) and a point in the x-z plane with positive x."""
    R2 = config.R2
    (x,) = coerce(x)
    t = x / (2 * R2)
    sigma2 = t * (2 - t)
    if not sigma2 > 0:
        raise DomainError(f"Edge value {x} is not a chord of the sphere")
    scale2 = (R2 * sigma2, R2 * sigma2, R2)
    zero = 0 * t
    first = SpherePoint(zero, zero, zero + 1, config=config, scale2=scale2)
    second = SpherePoint(zero + 1, zero, 1 - t, config=config, scale2=scale2)
    return first, second


def realize_polygon(
    tri: Triangulation,
    m: MeasurementSet,
    config: SphereConfig,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> List[SpherePoint]:
    """
    Points P_1..P_n whose measurements on `tri` reproduce `m`

    The first triangle in sorted order fixes the gauge; every other vertex is
    placed across an already placed edge.

    Returns:
        Points in vertex order 1..n, all in one coordinate frame
    """
    m.check(tri, config.K, policy)
    for i, j in tri.edges():
        if is_degenerate_diagonal(m.edge(i, j), config.K, policy):
            raise AntipodalOrCoincident(f"x = {m.edge(i, j)} is 0 or 4/K", index=(i, j))

    triangles = tri.triangles()
    i, j, _ = triangles[0]
    placed: Dict[int, SpherePoint] = {}
    placed[i], placed[j] = _gauge_pair(m.edge(i, j), config)

    pending = deque(triangles)
    stalled = 0
    while pending and stalled <= len(pending):
        triangle = pending.popleft()
        new = [v for v in triangle if v not in placed]
        if not new:
            stalled = 0
            continue
        if len(new) > 1:
            pending.append(triangle)
            stalled += 1
            continue
        w = new[0]
        u, v = (x for x in triangle if x != w)
        placed[w] = place_third_point(
            placed[u], placed[v], a=m.edge(v, w), c=m.edge(u, w), p=m.triangle(u, w, v), policy=policy
        )
        logger.debug(f"Placed vertex {w} across edge {(u, v)}")
        stalled = 0

    if len(placed) != tri.n:
        raise MalformedTriangulation("Triangles are not connected through shared edges")
    logger.info(f"Realized {tri.n}-gon from {len(triangles)} triangles")
    return [placed[v] for v in range(1, tri.n + 1)]


def measure_polygon(points: Sequence[SpherePoint], tri: Optional[Triangulation] = None) -> MeasurementSet:
    """
    Measurements of a polygon on a triangulation (all pairs and triples when omitted)

    Triangle values are recorded for increasing vertex triples.
    """
    n = len(points)
    if tri is None:
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        triangles = [
            (i, j, k)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            for k in range(j + 1, n + 1)
        ]
    else:
        if tri.n != n:
            raise MalformedTriangulation(f"Triangulation has {tri.n} vertices, polygon has {n}")
        edges, triangles = tri.edges(), tri.triangles()
    return measurement_set(
        {(i, j): sq_dist(points[i - 1], points[j - 1]) for i, j in edges},
        {
            (i, j, k): s_kappa(points[i - 1], points[j - 1], points[k - 1])
            for i, j, k in triangles
        },
    )


def diamond_from_points(A1: SpherePoint, A2: SpherePoint, A3: SpherePoint, A4: SpherePoint) -> HeronianDiamond:
    """Heronian diamond of the quadrilateral A1A2A3A4."""
    return HeronianDiamond(
        a=sq_dist(A1, A4),
        b=sq_dist(A1, A2),
        c=sq_dist(A2, A3),
        d=sq_dist(A3, A4),
        e=sq_dist(A1, A3),
        f=sq_dist(A2, A4),
        p=s_kappa(A1, A2, A3),
        q=s_kappa(A1, A3, A4),
        r=s_kappa(A1, A2, A4),
        s=s_kappa(A2, A3, A4),
    )
