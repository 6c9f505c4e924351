"""Planar primitives: polygons, oriented boundary lines, containment.

Every polygon side lies on an infinite carrier line written as
``alpha*x + beta*y + gamma = 0`` with ``alpha**2 + beta**2 = 1``.  A sign
``epsilon`` is attached per line so that ``epsilon * (alpha*x + beta*y + gamma)``
is the nonnegative inward distance on the interior of the owning convex
region.  All types are immutable after construction and all operations are
pure functions.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateInput, NotConvex

DEFAULT_TOL = 1e-9

Point2 = tuple[float, float]


class Containment(Enum):
    INSIDE = "Inside"
    ON_BOUNDARY = "OnBoundary"
    OUTSIDE = "Outside"


class Convexity(Enum):
    CONVEX = "Convex"
    CONCAVE = "Concave"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class ConvexityReport:
    verdict: Convexity
    reflex_vertex_indices: tuple[int, ...] = ()


@dataclass(frozen=True)
class BoundaryLine:
    """Unit-normal carrier line of a polygon side, with inward sign.

    ``value(p)`` is the raw line expression; multiplied by ``epsilon`` it is
    the signed inward distance, nonnegative on the interior of the region
    the line was built for.
    """

    alpha: float
    beta: float
    gamma: float
    epsilon: int

    def value(self, p) -> float:
        return self.alpha * p[0] + self.beta * p[1] + self.gamma

    def inward_distance(self, p) -> float:
        return self.epsilon * self.value(p)


def _as_vertex_array(vertices) -> np.ndarray:
    arr = np.asarray(vertices, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise DegenerateInput("polygon vertices must be an (n, 2) sequence")
    if not np.all(np.isfinite(arr)):
        raise DegenerateInput("polygon vertices must be finite")
    return arr


def _merge_redundant_vertices(arr: np.ndarray, tol: float) -> np.ndarray:
    """Drop coincident neighbors and collinear middle vertices (with a warning)."""
    scale = max(1.0, float(np.abs(arr).max()))
    keep = list(range(len(arr)))
    changed = True
    while changed and len(keep) >= 3:
        changed = False
        m = len(keep)
        for idx in range(m):
            a = arr[keep[(idx - 1) % m]]
            b = arr[keep[idx]]
            c = arr[keep[(idx + 1) % m]]
            cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
            if np.hypot(*(b - a)) <= tol * scale or abs(cross) <= tol * scale * scale:
                warnings.warn(
                    "merged coincident/collinear consecutive polygon vertex "
                    f"at index {keep[idx]}",
                    stacklevel=4,
                )
                del keep[idx]
                changed = True
                break
    return arr[keep]


def _segments_properly_intersect(p1, p2, q1, q2, eps: float) -> bool:
    """True if open segments p1p2 and q1q2 cross or overlap."""

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and (
        (d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)
    ):
        return True
    # collinear overlap
    if max(abs(d1), abs(d2), abs(d3), abs(d4)) <= eps:
        for lo, hi, vals in (
            (min(p1[0], p2[0]), max(p1[0], p2[0]), (q1[0], q2[0])),
            (min(p1[1], p2[1]), max(p1[1], p2[1]), (q1[1], q2[1])),
        ):
            if min(vals) > hi or max(vals) < lo:
                return False
        return True
    return False


class Polygon:
    """Simple polygon given by an ordered vertex loop (implicitly closed).

    The constructor validates finiteness, merges coincident/collinear
    consecutive vertices, and rejects self-intersecting or zero-area input.
    Vertex order (CW or CCW) is preserved; use :func:`orient_ccw` to
    normalize.
    """

    def __init__(self, vertices, tol: float = DEFAULT_TOL):
        arr = _as_vertex_array(vertices)
        arr = _merge_redundant_vertices(arr, tol)
        if len(arr) < 3:
            raise DegenerateInput("polygon needs at least 3 non-collinear vertices")
        self._v = arr
        self._v.flags.writeable = False
        self.tol = tol
        x, y = arr[:, 0], arr[:, 1]
        xn, yn = np.roll(x, -1), np.roll(y, -1)
        self._signed_area = 0.5 * float(np.sum(x * yn - xn * y))
        diag = float(np.hypot(x.max() - x.min(), y.max() - y.min()))
        if abs(self._signed_area) <= tol * max(1.0, diag) ** 2:
            raise DegenerateInput("polygon has zero signed area")
        self._check_simple(tol * max(1.0, diag) ** 2)

    def _check_simple(self, eps: float) -> None:
        v = self._v
        n = len(v)
        for i in range(n):
            for j in range(i + 1, n):
                if j == i or (j + 1) % n == i or (i + 1) % n == j:
                    continue
                if _segments_properly_intersect(
                    v[i], v[(i + 1) % n], v[j], v[(j + 1) % n], eps
                ):
                    raise DegenerateInput(
                        f"polygon is not simple: edges {i} and {j} intersect"
                    )

    @property
    def vertices(self) -> np.ndarray:
        return self._v

    @property
    def n(self) -> int:
        return len(self._v)

    @property
    def signed_area(self) -> float:
        return self._signed_area

    @property
    def area(self) -> float:
        return abs(self._signed_area)

    @property
    def centroid(self) -> np.ndarray:
        """Area centroid; strictly interior for convex polygons."""
        v = self._v
        w = np.roll(v, -1, axis=0)
        cross = v[:, 0] * w[:, 1] - w[:, 0] * v[:, 1]
        c = (v + w) * cross[:, None]
        return c.sum(axis=0) / (6.0 * self._signed_area)

    @property
    def vertex_centroid(self) -> np.ndarray:
        return self._v.mean(axis=0)

    @property
    def bounds(self) -> tuple[float, float, float, float]:
        v = self._v
        return (
            float(v[:, 0].min()),
            float(v[:, 1].min()),
            float(v[:, 0].max()),
            float(v[:, 1].max()),
        )

    @property
    def bbox_diagonal(self) -> float:
        x0, y0, x1, y1 = self.bounds
        return float(np.hypot(x1 - x0, y1 - y0))

    def edge(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        return self._v[i], self._v[(i + 1) % self.n]

    def edges(self):
        for i in range(self.n):
            yield self.edge(i)

    def contains(self, p, tol: float | None = None) -> Containment:
        return contains(self, p, tol)

    def contains_batch(self, pts: np.ndarray, tol: float | None = None) -> np.ndarray:
        return contains_batch(self, pts, tol)

    def __repr__(self) -> str:
        return f"Polygon({self._v.tolist()!r})"


def orient_ccw(polygon: Polygon) -> Polygon:
    """Return the polygon with positive signed area (idempotent)."""
    if polygon.signed_area > 0:
        return polygon
    return Polygon(polygon.vertices[::-1], tol=polygon.tol)


def is_convex(polygon: Polygon, tol: float = DEFAULT_TOL) -> ConvexityReport:
    """Classify a polygon by the turn direction at each vertex.

    Works on either orientation: turns are measured against the polygon's
    own winding.  Reflex indices identify vertices with interior angle > pi.
    """
    v = polygon.vertices
    n = polygon.n
    orient = 1.0 if polygon.signed_area > 0 else -1.0
    reflex = []
    for i in range(n):
        a, b, c = v[(i - 1) % n], v[i], v[(i + 1) % n]
        e1 = b - a
        e2 = c - b
        cross = (e1[0] * e2[1] - e1[1] * e2[0]) * orient
        norm = np.hypot(*e1) * np.hypot(*e2)
        if cross < -tol * norm:
            reflex.append(i)
    if reflex:
        return ConvexityReport(Convexity.CONCAVE, tuple(reflex))
    return ConvexityReport(Convexity.CONVEX)


def edge_line(polygon: Polygon, edge_index: int) -> tuple[float, float, float]:
    """Unit-normal carrier line of an edge, normal on the interior side
    for CCW polygons (left of the directed edge)."""
    a, b = polygon.edge(edge_index)
    d = b - a
    length = float(np.hypot(*d))
    if length == 0.0:
        raise DegenerateInput(f"edge {edge_index} has zero length")
    alpha = -d[1] / length
    beta = d[0] / length
    gamma = -(alpha * a[0] + beta * a[1])
    return float(alpha), float(beta), float(gamma)


def boundary_line_of_edge(
    polygon: Polygon, edge_index: int, tol: float = DEFAULT_TOL
) -> BoundaryLine:
    """Carrier line of a convex polygon edge with inward sign.

    ``epsilon`` is anchored at the polygon centroid, which is strictly
    interior for convex regions, so ``inward_distance`` is positive there.
    """
    report = is_convex(polygon, tol)
    if report.verdict is not Convexity.CONVEX:
        raise NotConvex(
            "boundary_line_of_edge needs a convex polygon; the inward sign of a "
            "concave polygon's line is only defined per partition cell"
        )
    if not 0 <= edge_index < polygon.n:
        raise IndexError(f"edge index {edge_index} out of range")
    alpha, beta, gamma = edge_line(polygon, edge_index)
    c = polygon.centroid
    epsilon = 1 if alpha * c[0] + beta * c[1] + gamma > 0 else -1
    return BoundaryLine(alpha, beta, gamma, epsilon)


def signed_inward_distance(line: BoundaryLine, p) -> float:
    """``epsilon * (alpha*x + beta*y + gamma)``; the Euclidean distance to the
    line for points on the inward side."""
    return line.inward_distance(p)


def contains_batch(polygon: Polygon, pts, tol: float | None = None) -> np.ndarray:
    """Vectorized point classification, coded as INSIDE/ON_BOUNDARY/OUTSIDE.

    Boundary detection is distance-to-edge within ``tol`` (absolute, the
    tolerance regime of unit-normal quantities); interior test is even-odd
    ray crossing.
    """
    if tol is None:
        tol = polygon.tol
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    v = polygon.vertices
    a = v
    b = np.roll(v, -1, axis=0)
    d = b - a  # (n,2)
    px = pts[:, 0][:, None]
    py = pts[:, 1][:, None]
    # distance to each edge segment
    apx = px - a[:, 0]
    apy = py - a[:, 1]
    seg_len2 = (d**2).sum(axis=1)
    t = np.clip((apx * d[:, 0] + apy * d[:, 1]) / seg_len2, 0.0, 1.0)
    dx = apx - t * d[:, 0]
    dy = apy - t * d[:, 1]
    on_boundary = (np.hypot(dx, dy) <= tol).any(axis=1)
    # even-odd crossing test against upward/downward edges
    ay = a[:, 1]
    by = b[:, 1]
    cond = (ay > py) != (by > py)
    with np.errstate(divide="ignore", invalid="ignore"):
        x_cross = a[:, 0] + (py - ay) * d[:, 0] / d[:, 1]
    crossings = (cond & (px < x_cross)).sum(axis=1)
    inside = crossings % 2 == 1
    out = np.full(len(pts), Containment.OUTSIDE, dtype=object)
    out[inside] = Containment.INSIDE
    out[on_boundary] = Containment.ON_BOUNDARY
    return out


def contains(polygon: Polygon, p, tol: float | None = None) -> Containment:
    return contains_batch(polygon, [p], tol)[0]
