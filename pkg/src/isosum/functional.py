"""The distance-sum functional V and its classification.

For a convex polygon whose sides lie on unit-normal lines, the sum of the
distances from an interior point to all side carrier lines collapses to a
single affine expression ``grad . p + constant``.  The same holds for convex
polyhedra with face carrier planes.  ``V`` is either constant over the whole
region (the constant-sum property, "CVS") or strictly increasing along its
gradient, in which case its level sets cut the region into parallel isosum
segments (2D) or cross sections (3D).

Two independent evaluation routes are kept side by side on purpose:

* the affine functional, assembled from signed line/plane coefficients;
* :func:`distance_profile`, the oracle, which measures each per-side
  distance straight from the vertex data and sums them.

Tests and the ``verify`` command cross-check one against the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import CVSRegion, NotConvex, OutsideRegion
from .geometry import (
    DEFAULT_TOL,
    Containment,
    Convexity,
    Polygon,
    edge_line,
    is_convex,
)
from .polyhedra import Polyhedron

# Non-collinearity threshold of the point tests: triangle area (tetrahedron
# volume) must exceed this factor times diag**2 (diag**3).
NONDEGENERATE_SPAN_FACTOR = 1e-12


@dataclass(frozen=True)
class AffineFunctional2:
    """Affine map ``(x, y) -> gx*x + gy*y + constant``.

    ``terms`` counts the unit-normal distance terms that were summed; it is
    the conditioning scale used by :func:`classify`.
    """

    gx: float
    gy: float
    constant: float
    terms: int = 1

    @property
    def grad(self) -> np.ndarray:
        return np.array([self.gx, self.gy])

    def value(self, p) -> float:
        return self.gx * p[0] + self.gy * p[1] + self.constant

    def value_batch(self, pts: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        return pts @ self.grad + self.constant


@dataclass(frozen=True)
class AffineFunctional3:
    """Affine map ``(x, y, z) -> grad . p + constant``."""

    gx: float
    gy: float
    gz: float
    constant: float
    terms: int = 1

    @property
    def grad(self) -> np.ndarray:
        return np.array([self.gx, self.gy, self.gz])

    def value(self, p) -> float:
        return self.gx * p[0] + self.gy * p[1] + self.gz * p[2] + self.constant

    def value_batch(self, pts: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        return pts @ self.grad + self.constant


@dataclass(frozen=True)
class DistanceProfile:
    """Per-side distances of one point, plus their sum (= V at the point)."""

    distances: tuple[float, ...]
    total: float


class Verdict(Enum):
    CVS = "CVS"
    NON_CVS = "NonCVS"


@dataclass(frozen=True)
class Classification:
    """Either CVS with the constant value, or the isosum direction.

    In 2D ``direction`` spans the isosum segments (perpendicular to the
    gradient); in 3D it is the unit normal of the isosum planes (parallel to
    the gradient).  Both are sign-normalized: first nonzero component
    positive.
    """

    verdict: Verdict
    functional: AffineFunctional2 | AffineFunctional3
    value: float | None = None
    direction: tuple[float, ...] | None = None

    @property
    def is_cvs(self) -> bool:
        return self.verdict is Verdict.CVS


def carrier_distances(polygon: Polygon, pts) -> np.ndarray:
    """(m, n) distances from points to every edge carrier line.

    Computed directly from vertex pairs (cross product over edge length),
    independent of the signed line bookkeeping.
    """
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    a = polygon.vertices
    b = np.roll(a, -1, axis=0)
    d = b - a
    lengths = np.hypot(d[:, 0], d[:, 1])
    rx = pts[:, 0][:, None] - a[:, 0]
    ry = pts[:, 1][:, None] - a[:, 1]
    cross = d[:, 0] * ry - d[:, 1] * rx
    return np.abs(cross) / lengths


def face_distances(poly: Polyhedron, pts) -> np.ndarray:
    """(m, n_faces) distances from points to every face carrier plane."""
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    cols = []
    for face in poly.faces:
        fv = poly.vertices[list(face)]
        # raw cross product of two face edges; faces are planar by validation
        e1 = fv[1] - fv[0]
        e2 = fv[2] - fv[0]
        normal = np.cross(e1, e2)
        norm = np.linalg.norm(normal)
        if norm == 0.0:  # fall back to a non-adjacent vertex pair
            e2 = fv[3] - fv[0]
            normal = np.cross(e1, e2)
            norm = np.linalg.norm(normal)
        cols.append(np.abs((pts - fv[0]) @ normal) / norm)
    return np.column_stack(cols)


def distance_profile(region, p, tol: float = DEFAULT_TOL) -> DistanceProfile:
    """Direct per-side (per-face) distance sum at a strictly interior point.

    This is the oracle route: it never touches the affine form.
    """
    if isinstance(region, Polygon):
        if region.contains(p, tol) is not Containment.INSIDE:
            raise OutsideRegion(f"point {tuple(p)} is not strictly inside")
        row = carrier_distances(region, [p])[0]
    elif isinstance(region, Polyhedron):
        if region.contains(p, tol) is not Containment.INSIDE:
            raise OutsideRegion(f"point {tuple(p)} is not strictly inside")
        row = face_distances(region, [p])[0]
    else:
        raise TypeError(f"unsupported region type {type(region)!r}")
    return DistanceProfile(tuple(float(x) for x in row), float(row.sum()))


def functional2(polygon: Polygon, tol: float = DEFAULT_TOL) -> AffineFunctional2:
    """Assemble V for a convex polygon from its signed boundary lines."""
    report = is_convex(polygon, tol)
    if report.verdict is not Convexity.CONVEX:
        raise NotConvex(
            "V is a single affine expression only on convex polygons; "
            "use the partition module for concave input"
        )
    c = polygon.centroid
    gx = gy = const = 0.0
    for i in range(polygon.n):
        alpha, beta, gamma = edge_line(polygon, i)
        eps = 1.0 if alpha * c[0] + beta * c[1] + gamma > 0 else -1.0
        gx += eps * alpha
        gy += eps * beta
        const += eps * gamma
    return AffineFunctional2(gx, gy, const, terms=polygon.n)


def functional3(poly: Polyhedron, tol: float = DEFAULT_TOL) -> AffineFunctional3:
    """Assemble V for a convex polyhedron from its signed boundary planes."""
    poly.require_convex(tol)
    g = np.zeros(3)
    const = 0.0
    for plane in poly.planes:
        g += plane.epsilon * plane.normal
        const += plane.epsilon * plane.delta
    return AffineFunctional3(
        float(g[0]), float(g[1]), float(g[2]), const, terms=poly.n_faces
    )


def _canonical_direction(vec: np.ndarray) -> tuple[float, ...]:
    v = np.asarray(vec, dtype=float)
    v = v / np.linalg.norm(v)
    for comp in v:
        if abs(comp) > 1e-12:
            if comp < 0:
                v = -v
            break
    return tuple(float(x) + 0.0 for x in v)


def classify(
    f: AffineFunctional2 | AffineFunctional3, tol: float = DEFAULT_TOL
) -> Classification:
    """CVS when the gradient vanishes relative to the term count.

    Each summed unit-normal term contributes at most 1 to the gradient, so
    ``tol * terms`` bounds the cancellation noise.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    grad = f.grad
    if np.linalg.norm(grad) <= tol * f.terms:
        return Classification(Verdict.CVS, f, value=float(f.constant))
    if isinstance(f, AffineFunctional2):
        direction = _canonical_direction([-grad[1], grad[0]])
    else:
        direction = _canonical_direction(grad)
    return Classification(Verdict.NON_CVS, f, direction=direction)


def isosum_segment(
    polygon: Polygon,
    f: AffineFunctional2,
    c: float,
    tol: float = DEFAULT_TOL,
) -> tuple[np.ndarray, np.ndarray] | None:
    """Clip the level line ``f = c`` to a convex polygon.

    Returns the segment endpoints, a zero-length pair when the level set
    touches a single vertex, or ``None`` when it misses the polygon.
    """
    cls = classify(f, tol)
    if cls.is_cvs:
        raise CVSRegion("level sets of a constant functional are all-or-nothing")
    report = is_convex(polygon, tol)
    if report.verdict is not Convexity.CONVEX:
        raise NotConvex("isosum segments are defined per convex region")

    v = polygon.vertices
    vals = f.value_batch(v) - c
    span = max(1.0, float(np.abs(vals).max()))
    eps = tol * span
    points: list[np.ndarray] = []
    n = polygon.n
    for i in range(n):
        j = (i + 1) % n
        vi, vj = vals[i], vals[j]
        if abs(vi) <= eps:
            points.append(v[i])
        if vi * vj < 0 and abs(vi) > eps and abs(vj) > eps:
            t = vi / (vi - vj)
            points.append(v[i] + t * (v[j] - v[i]))
    if not points:
        return None
    pts = np.array(points)
    direction = np.array(cls.direction)
    params = pts @ direction
    lo = pts[int(np.argmin(params))]
    hi = pts[int(np.argmax(params))]
    return lo.copy(), hi.copy()


class TripleVerdict(Enum):
    IMPLIES_CVS = "ImpliesCVS"
    COLLINEAR = "Collinear"
    NOT_EQUAL_SUMS = "NotEqualSums"


class QuadVerdict(Enum):
    IMPLIES_CVS = "ImpliesCVS"
    COPLANAR = "Coplanar"
    NOT_EQUAL_SUMS = "NotEqualSums"


def _sums_equal(totals: list[float], tol: float) -> bool:
    scale = 1.0 + max(abs(t) for t in totals)
    return max(totals) - min(totals) <= tol * scale


def three_point_cvs_test(
    polygon: Polygon, p1, p2, p3, tol: float = DEFAULT_TOL
) -> TripleVerdict:
    """Converse test: equal oracle sums at a non-collinear interior triple
    certify the constant-sum property of a convex polygon."""
    report = is_convex(polygon, tol)
    if report.verdict is not Convexity.CONVEX:
        raise NotConvex("the three-point certificate applies to convex polygons")
    totals = [distance_profile(polygon, p, tol).total for p in (p1, p2, p3)]
    if not _sums_equal(totals, tol):
        return TripleVerdict.NOT_EQUAL_SUMS
    a = np.asarray(p1, dtype=float)
    b = np.asarray(p2, dtype=float)
    c = np.asarray(p3, dtype=float)
    u, w = b - a, c - a
    area = 0.5 * abs(u[0] * w[1] - u[1] * w[0])
    if area <= NONDEGENERATE_SPAN_FACTOR * polygon.bbox_diagonal**2:
        return TripleVerdict.COLLINEAR
    return TripleVerdict.IMPLIES_CVS


def four_point_cvs_test(
    poly: Polyhedron, p1, p2, p3, p4, tol: float = DEFAULT_TOL
) -> QuadVerdict:
    """3D analogue: equal sums at four non-coplanar interior points."""
    poly.require_convex(tol)
    totals = [distance_profile(poly, p, tol).total for p in (p1, p2, p3, p4)]
    if not _sums_equal(totals, tol):
        return QuadVerdict.NOT_EQUAL_SUMS
    a, b, c, d = (np.asarray(p, dtype=float) for p in (p1, p2, p3, p4))
    volume = abs(np.linalg.det(np.array([b - a, c - a, d - a]))) / 6.0
    if volume <= NONDEGENERATE_SPAN_FACTOR * poly.bbox_diagonal**3:
        return QuadVerdict.COPLANAR
    return QuadVerdict.IMPLIES_CVS
