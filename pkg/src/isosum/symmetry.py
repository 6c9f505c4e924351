"""Polygon isometry detection and the symmetry-based CVS predictions.

A plane isometry fixing a polygon permutes its vertex cycle, preserving
adjacency, and fixes the vertex centroid.  Candidates are therefore
generated combinatorially: rotations from cyclic relabelings about the
vertex centroid, reflection axes through the centroid and each vertex or
edge midpoint.  A nontrivial rotation forces the constant-sum property; a
lone reflection forces the isosum segments perpendicular to its axis.

3D symmetries are not detected; the polyhedron prediction rule takes
caller-declared rotation axes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateInput
from .functional import Classification, classify, functional2
from .geometry import DEFAULT_TOL, Polygon

ANGLE_TOL = 1e-9


@dataclass(frozen=True)
class Rotation2:
    center: tuple[float, float]
    angle: float  # radians in (0, 2*pi)

    def apply(self, pts: np.ndarray) -> np.ndarray:
        c = np.array(self.center)
        ca, sa = np.cos(self.angle), np.sin(self.angle)
        rel = np.atleast_2d(pts) - c
        return c + rel @ np.array([[ca, sa], [-sa, ca]])


@dataclass(frozen=True)
class Reflection2:
    point: tuple[float, float]  # a point on the axis
    direction: tuple[float, float]  # unit axis direction

    def apply(self, pts: np.ndarray) -> np.ndarray:
        c = np.array(self.point)
        ux, uy = self.direction
        h = np.array([[ux * ux - uy * uy, 2 * ux * uy], [2 * ux * uy, uy * uy - ux * ux]])
        rel = np.atleast_2d(pts) - c
        return c + rel @ h.T


Isometry2 = Rotation2 | Reflection2


class PredictionKind(Enum):
    MUST_BE_CVS = "MustBeCVS"
    ISOSUM_PERPENDICULAR_TO = "IsosumPerpendicularTo"
    NO_PREDICTION = "NoPrediction"


@dataclass(frozen=True)
class Prediction:
    kind: PredictionKind
    axis: Reflection2 | None = None


@dataclass(frozen=True)
class SymmetryReport:
    rotations: tuple[Rotation2, ...]
    reflections: tuple[Reflection2, ...]
    prediction: Prediction


def _matches_cycle(mapped: np.ndarray, verts: np.ndarray, atol: float, reverse: bool) -> bool:
    n = len(verts)
    idx = np.arange(n)
    for shift in range(n):
        target = (shift - idx) % n if reverse else (idx + shift) % n
        if np.abs(mapped - verts[target]).max() <= atol:
            return True
    return False


def detect_symmetries(polygon: Polygon, tol: float = DEFAULT_TOL) -> SymmetryReport:
    """All rotations/reflections fixing the polygon, and the CVS prediction."""
    verts = polygon.vertices
    n = polygon.n
    if n < 3:
        raise DegenerateInput("symmetry detection needs a polygon")
    c = polygon.vertex_centroid
    atol = tol * max(1.0, polygon.bbox_diagonal)

    rel = verts - c
    radii = np.hypot(rel[:, 0], rel[:, 1])
    angles = np.arctan2(rel[:, 1], rel[:, 0])
    # anchor the candidate angle at the vertex farthest from the centroid;
    # its radius is always positive for a polygon with area
    r0 = int(np.argmax(radii))

    rotations = []
    for k in range(1, n):
        theta = float((angles[(r0 + k) % n] - angles[r0]) % (2 * np.pi))
        if theta <= 0.0:
            continue
        rot = Rotation2((float(c[0]), float(c[1])), theta)
        mapped = rot.apply(verts)
        target = np.roll(verts, -k, axis=0)
        if np.abs(mapped - target).max() <= atol:
            rotations.append(rot)

    reflections = []
    seen_axes: list[np.ndarray] = []
    candidates = [verts[i] for i in range(n)] + [
        (verts[i] + verts[(i + 1) % n]) / 2.0 for i in range(n)
    ]
    for p in candidates:
        d = np.asarray(p, dtype=float) - c
        norm = np.hypot(*d)
        if norm <= atol:
            continue
        u = d / norm
        if u[0] < 0 or (abs(u[0]) <= 1e-12 and u[1] < 0):
            u = -u
        if any(np.abs(u - s).max() <= 1e-9 for s in seen_axes):
            continue
        seen_axes.append(u)
        refl = Reflection2((float(c[0]), float(c[1])), (float(u[0]), float(u[1])))
        mapped = refl.apply(verts)
        if _matches_cycle(mapped, verts, atol, reverse=True):
            reflections.append(refl)

    if rotations:
        prediction = Prediction(PredictionKind.MUST_BE_CVS)
    elif reflections:
        prediction = Prediction(
            PredictionKind.ISOSUM_PERPENDICULAR_TO, axis=reflections[0]
        )
    else:
        prediction = Prediction(PredictionKind.NO_PREDICTION)
    return SymmetryReport(tuple(rotations), tuple(reflections), prediction)


@dataclass(frozen=True)
class Corollary3Report:
    prediction: Prediction
    classification: Classification
    passed: bool
    detail: str


def check_corollary3(polygon: Polygon, tol: float = DEFAULT_TOL) -> Corollary3Report:
    """Cross-check the symmetry prediction against the computed functional.

    MustBeCVS demands a CVS verdict; a lone reflection demands CVS or isosum
    segments perpendicular to the axis (|cos| <= 1e-9).
    """
    report = detect_symmetries(polygon, tol)
    cls = classify(functional2(polygon, tol), tol)
    pred = report.prediction
    if pred.kind is PredictionKind.MUST_BE_CVS:
        passed = cls.is_cvs
        detail = f"rotation present, verdict {cls.verdict.value}"
    elif pred.kind is PredictionKind.ISOSUM_PERPENDICULAR_TO:
        if cls.is_cvs:
            passed = True
            detail = "reflection present, verdict CVS"
        else:
            axis = np.array(pred.axis.direction)
            cosang = abs(float(np.dot(axis, np.array(cls.direction))))
            passed = cosang <= ANGLE_TOL
            detail = (
                f"reflection axis {pred.axis.direction}, isosum direction "
                f"{cls.direction}, |cos| = {cosang:.3e}"
            )
    else:
        passed = True
        detail = "no symmetry, nothing to check"
    return Corollary3Report(pred, cls, passed, detail)


@dataclass(frozen=True)
class RotationAxis3:
    """Caller-declared rotational symmetry axis of a polyhedron."""

    point: tuple[float, float, float]
    direction: tuple[float, float, float]


def predict_corollary4(declared: list[RotationAxis3], tol: float = DEFAULT_TOL) -> PredictionKind:
    """MustBeCVS when two declared rotation axes are non-parallel."""
    dirs = []
    for axis in declared:
        d = np.asarray(axis.direction, dtype=float)
        norm = np.linalg.norm(d)
        if norm == 0.0:
            raise DegenerateInput("rotation axis direction must be nonzero")
        dirs.append(d / norm)
    for i in range(len(dirs)):
        for j in range(i + 1, len(dirs)):
            if np.linalg.norm(np.cross(dirs[i], dirs[j])) > tol:
                return PredictionKind.MUST_BE_CVS
    return PredictionKind.NO_PREDICTION
