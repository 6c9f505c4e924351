"""Scene-level analysis: the operations behind the service endpoints.

Everything here is deterministic for a fixed (scene, tol, samples, seed):
sampling is counter-based and reductions are order-independent maxima.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .functional import (
    Classification,
    carrier_distances,
    classify,
    face_distances,
    functional2,
    functional3,
)
from .geometry import DEFAULT_TOL, Containment, Convexity, Polygon, is_convex
from .partition import NeighborReport, Partition, neighbor_check, partition
from .polyhedra import Polyhedron
from .sampling import sample_interior_polygon, sample_interior_polyhedron
from .scene import POLYGON2, POLYHEDRON3, Scene
from .symmetry import (
    Corollary3Report,
    PredictionKind,
    SymmetryReport,
    check_corollary3,
    detect_symmetries,
    predict_corollary4,
)

DEFAULT_ORACLE_SAMPLES = 1000


@dataclass(frozen=True)
class OracleSummary:
    """Monte-Carlo cross-check of the affine V against the direct sums."""

    samples: int
    seed: int
    tol: float
    max_residual: float
    passed: bool


@dataclass(frozen=True)
class Corollary4Report:
    prediction: PredictionKind
    classification: Classification
    passed: bool


@dataclass
class AnalysisReport:
    kind: str
    convexity: str
    reflex_vertices: tuple[int, ...]
    classification: Classification | None
    partition: Partition | None
    neighbor_report: NeighborReport | None
    symmetry: SymmetryReport | None
    corollary3: Corollary3Report | None
    corollary4: Corollary4Report | None
    oracle: OracleSummary

    @property
    def status(self) -> str:
        return "OK" if self.oracle.passed else "FAILED"


def _relative_residuals(affine: np.ndarray, oracle: np.ndarray) -> np.ndarray:
    return np.abs(affine - oracle) / (1.0 + np.abs(oracle))


def verify_polygon(
    polygon: Polygon, samples: int, seed: int, tol: float = DEFAULT_TOL
) -> OracleSummary:
    pts = sample_interior_polygon(polygon, samples, seed)
    oracle = carrier_distances(polygon, pts).sum(axis=1)
    report = is_convex(polygon, tol)
    if report.verdict is Convexity.CONVEX:
        affine = functional2(polygon, tol).value_batch(pts)
        residuals = _relative_residuals(affine, oracle)
    else:
        part = partition(polygon, tol)
        residuals = np.full(len(pts), np.inf)
        assigned = np.zeros(len(pts), dtype=bool)
        for cell in part.cells:
            mask = ~assigned
            if not mask.any():
                break
            inside = cell.shape.contains_batch(pts[mask]) == Containment.INSIDE
            idx = np.flatnonzero(mask)[inside]
            affine = cell.functional.value_batch(pts[idx])
            residuals[idx] = _relative_residuals(affine, oracle[idx])
            assigned[idx] = True
        # points on internal cell edges: both neighboring functionals agree
        # there, so take the best cell
        for k in np.flatnonzero(~assigned):
            best = min(
                abs(cell.functional.value(pts[k]) - oracle[k])
                for cell in part.cells
            )
            residuals[k] = best / (1.0 + abs(oracle[k]))
    worst = float(residuals.max()) if len(residuals) else 0.0
    return OracleSummary(samples, seed, tol, worst, worst <= tol)


def verify_polyhedron(
    poly: Polyhedron, samples: int, seed: int, tol: float = DEFAULT_TOL
) -> OracleSummary:
    pts = sample_interior_polyhedron(poly, samples, seed)
    oracle = face_distances(poly, pts).sum(axis=1)
    affine = functional3(poly, tol).value_batch(pts)
    worst = float(_relative_residuals(affine, oracle).max()) if len(pts) else 0.0
    return OracleSummary(samples, seed, tol, worst, worst <= tol)


def verify_scene(
    scene: Scene,
    samples: int,
    seed: int,
    tol: float = DEFAULT_TOL,
) -> OracleSummary:
    if scene.kind == POLYGON2:
        return verify_polygon(scene.to_polygon(tol), samples, seed, tol)
    return verify_polyhedron(scene.to_polyhedron(tol), samples, seed, tol)


def analyze_scene(
    scene: Scene,
    tol: float = DEFAULT_TOL,
    samples: int = DEFAULT_ORACLE_SAMPLES,
    seed: int = 0,
) -> AnalysisReport:
    if scene.kind == POLYGON2:
        polygon = scene.to_polygon(tol)
        report = is_convex(polygon, tol)
        oracle = verify_polygon(polygon, samples, seed, tol)
        if report.verdict is Convexity.CONVEX:
            cls = classify(functional2(polygon, tol), tol)
            return AnalysisReport(
                kind=POLYGON2,
                convexity=report.verdict.value,
                reflex_vertices=report.reflex_vertex_indices,
                classification=cls,
                partition=None,
                neighbor_report=None,
                symmetry=detect_symmetries(polygon, tol),
                corollary3=check_corollary3(polygon, tol),
                corollary4=None,
                oracle=oracle,
            )
        part = partition(polygon, tol)
        return AnalysisReport(
            kind=POLYGON2,
            convexity=report.verdict.value,
            reflex_vertices=report.reflex_vertex_indices,
            classification=None,
            partition=part,
            neighbor_report=neighbor_check(part, tol),
            symmetry=detect_symmetries(polygon, tol),
            corollary3=None,
            corollary4=None,
            oracle=oracle,
        )
    if scene.kind == POLYHEDRON3:
        poly = scene.to_polyhedron(tol)
        cls = classify(functional3(poly, tol), tol)
        oracle = verify_polyhedron(poly, samples, seed, tol)
        corollary4 = None
        if scene.symmetry_axes:
            prediction = predict_corollary4(list(scene.symmetry_axes), tol)
            passed = prediction is not PredictionKind.MUST_BE_CVS or cls.is_cvs
            corollary4 = Corollary4Report(prediction, cls, passed)
        return AnalysisReport(
            kind=POLYHEDRON3,
            convexity="Convex" if poly.is_convex(tol) else "Concave",
            reflex_vertices=(),
            classification=cls,
            partition=None,
            neighbor_report=None,
            symmetry=None,
            corollary3=None,
            corollary4=corollary4,
            oracle=oracle,
        )
    raise ValidationError(f"unsupported scene kind {scene.kind!r}")
