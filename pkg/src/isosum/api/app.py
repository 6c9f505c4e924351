"""HTTP service wrapping the core analyses.

Every endpoint takes a scene payload and returns structured JSON; geometric
input problems surface as HTTP 400 with an error code and message.  The
service is stateless, so the CLI runs it in-process by default.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..analysis import (
    AnalysisReport,
    analyze_scene,
    verify_scene,
)
from ..errors import IsosumError
from ..functional import Classification, carrier_distances, classify, functional3
from ..geometry import DEFAULT_TOL, Convexity, is_convex
from ..lp import export_lp_text, triangle_to_lp
from ..partition import Partition, equal_sum_triple, neighbor_check, partition
from ..render import render_svg
from ..scene import POLYGON2, Scene, scene_from_obj
from ..symmetry import (
    PredictionKind,
    check_corollary3,
    detect_symmetries,
    predict_corollary4,
)
from .models import (
    AdjacencyModel,
    AnalyzeRequest,
    AnalyzeResponse,
    CellModel,
    ClassificationModel,
    Corollary3Model,
    Corollary4Model,
    LPRequest,
    LPResponse,
    NeighborModel,
    OracleModel,
    PartitionRequest,
    PartitionResponse,
    ReflectionModel,
    RenderRequest,
    RenderResponse,
    RotationModel,
    SceneModel,
    SymmetryModel,
    SymmetryRequest,
    SymmetryResponse,
    TripleModel,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(title="isosum", version=__version__)


def _scene(model: SceneModel) -> Scene:
    return scene_from_obj(model.model_dump(exclude_none=True))


def _fail(exc: IsosumError) -> HTTPException:
    return HTTPException(
        status_code=400,
        detail={"error": type(exc).__name__, "message": str(exc)},
    )


def _classification_model(cls: Classification) -> ClassificationModel:
    return ClassificationModel(
        verdict=cls.verdict.value,
        value=cls.value,
        direction=list(cls.direction) if cls.direction is not None else None,
        grad=[float(g) for g in cls.functional.grad],
        constant=float(cls.functional.constant),
    )


def _symmetry_model(report) -> SymmetryModel:
    return SymmetryModel(
        rotations=[
            RotationModel(center=list(r.center), angle=r.angle)
            for r in report.rotations
        ],
        reflections=[
            ReflectionModel(point=list(r.point), direction=list(r.direction))
            for r in report.reflections
        ],
        prediction=report.prediction.kind.value,
    )


def _cell_models(part: Partition, tol: float) -> list[CellModel]:
    out = []
    for cell in part.cells:
        cls = classify(cell.functional, tol)
        out.append(
            CellModel(
                vertices=cell.shape.vertices.tolist(),
                sign_vector=list(cell.sign_vector.signs),
                grad=[cell.functional.gx, cell.functional.gy],
                constant=cell.functional.constant,
                direction=list(cls.direction) if cls.direction is not None else None,
            )
        )
    return out


def _analyze_response(report: AnalysisReport, tol: float) -> AnalyzeResponse:
    return AnalyzeResponse(
        kind=report.kind,
        convexity=report.convexity,
        reflex_vertices=list(report.reflex_vertices),
        classification=(
            _classification_model(report.classification)
            if report.classification
            else None
        ),
        cells=_cell_models(report.partition, tol) if report.partition else None,
        neighbor=(
            NeighborModel(
                valid=report.neighbor_report.valid,
                violations=report.neighbor_report.violations,
                pairs_checked=report.neighbor_report.pairs_checked,
            )
            if report.neighbor_report
            else None
        ),
        symmetry=_symmetry_model(report.symmetry) if report.symmetry else None,
        corollary3=(
            Corollary3Model(
                prediction=report.corollary3.prediction.kind.value,
                passed=report.corollary3.passed,
                detail=report.corollary3.detail,
            )
            if report.corollary3
            else None
        ),
        corollary4=(
            Corollary4Model(
                prediction=report.corollary4.prediction.value,
                passed=report.corollary4.passed,
            )
            if report.corollary4
            else None
        ),
        oracle=OracleModel(
            samples=report.oracle.samples,
            seed=report.oracle.seed,
            tol=report.oracle.tol,
            max_residual=report.oracle.max_residual,
            passed=report.oracle.passed,
        ),
        status=report.status,
    )


@app.get("/healthz")
def healthz():
    return {"status": "ok", "version": __version__}


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze(req: AnalyzeRequest) -> AnalyzeResponse:
    tol = req.tol if req.tol is not None else DEFAULT_TOL
    try:
        report = analyze_scene(_scene(req.scene), tol, req.samples, req.seed)
    except IsosumError as exc:
        raise _fail(exc) from exc
    return _analyze_response(report, tol)


@app.post("/partition", response_model=PartitionResponse)
def partition_endpoint(req: PartitionRequest) -> PartitionResponse:
    tol = req.tol if req.tol is not None else DEFAULT_TOL
    try:
        polygon = _scene(req.scene).to_polygon(tol)
        part = partition(polygon, tol)
        neighbor = neighbor_check(part, tol)
        triple = equal_sum_triple(polygon, tol, part)
    except IsosumError as exc:
        raise _fail(exc) from exc
    totals = carrier_distances(polygon, list(triple)).sum(axis=1)
    return PartitionResponse(
        lines=[list(line) for line in part.lines],
        cells=_cell_models(part, tol),
        adjacency=[
            AdjacencyModel(
                i=a.i,
                j=a.j,
                line_index=a.line_index,
                segment=[list(a.segment[0]), list(a.segment[1])],
            )
            for a in part.adjacency
        ],
        neighbor=NeighborModel(
            valid=neighbor.valid,
            violations=neighbor.violations,
            pairs_checked=neighbor.pairs_checked,
        ),
        triple=TripleModel(
            points=[[float(x) for x in p] for p in triple],
            totals=[float(t) for t in totals],
        ),
    )


@app.post("/symmetry", response_model=SymmetryResponse)
def symmetry_endpoint(req: SymmetryRequest) -> SymmetryResponse:
    tol = req.tol if req.tol is not None else DEFAULT_TOL
    try:
        scene = _scene(req.scene)
        if scene.kind == POLYGON2:
            polygon = scene.to_polygon(tol)
            report = detect_symmetries(polygon, tol)
            cor3_model = cls_model = None
            if is_convex(polygon, tol).verdict is Convexity.CONVEX:
                cor3 = check_corollary3(polygon, tol)
                cor3_model = Corollary3Model(
                    prediction=cor3.prediction.kind.value,
                    passed=cor3.passed,
                    detail=cor3.detail,
                )
                cls_model = _classification_model(cor3.classification)
            return SymmetryResponse(
                kind=scene.kind,
                symmetry=_symmetry_model(report),
                corollary3=cor3_model,
                classification=cls_model,
            )
        poly = scene.to_polyhedron(tol)
        cls = classify(functional3(poly, tol), tol)
        prediction = predict_corollary4(list(scene.symmetry_axes), tol)
        passed = prediction is not PredictionKind.MUST_BE_CVS or cls.is_cvs
        return SymmetryResponse(
            kind=scene.kind,
            corollary4=Corollary4Model(prediction=prediction.value, passed=passed),
            classification=_classification_model(cls),
        )
    except IsosumError as exc:
        raise _fail(exc) from exc


@app.post("/render", response_model=RenderResponse)
def render_endpoint(req: RenderRequest) -> RenderResponse:
    tol = req.tol if req.tol is not None else DEFAULT_TOL
    try:
        svg = render_svg(_scene(req.scene), req.levels, tol)
    except IsosumError as exc:
        raise _fail(exc) from exc
    return RenderResponse(svg=svg)


@app.post("/lp", response_model=LPResponse)
def lp_endpoint(req: LPRequest) -> LPResponse:
    try:
        triangle = _scene(req.scene).to_polygon()
        lp = triangle_to_lp(triangle)
    except IsosumError as exc:
        raise _fail(exc) from exc
    return LPResponse(
        side_lengths=list(lp.side_lengths), area=lp.area, text=export_lp_text(lp)
    )


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    tol = req.tol if req.tol is not None else DEFAULT_TOL
    try:
        summary = verify_scene(_scene(req.scene), req.samples, req.seed, tol)
    except IsosumError as exc:
        raise _fail(exc) from exc
    return VerifyResponse(
        samples=summary.samples,
        seed=summary.seed,
        tol=summary.tol,
        max_residual=summary.max_residual,
        passed=summary.passed,
    )
