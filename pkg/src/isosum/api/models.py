"""Pydantic request/response models of the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel


class AxisModel(BaseModel):
    point: list[float]
    direction: list[float]


class SceneModel(BaseModel):
    kind: Literal["polygon2", "polyhedron3"]
    vertices: list[list[float]]
    faces: list[list[int]] | None = None
    symmetry_axes: list[AxisModel] | None = None


class ClassificationModel(BaseModel):
    verdict: str
    value: float | None = None
    direction: list[float] | None = None
    grad: list[float]
    constant: float


class OracleModel(BaseModel):
    samples: int
    seed: int
    tol: float
    max_residual: float
    passed: bool


class RotationModel(BaseModel):
    center: list[float]
    angle: float


class ReflectionModel(BaseModel):
    point: list[float]
    direction: list[float]


class SymmetryModel(BaseModel):
    rotations: list[RotationModel]
    reflections: list[ReflectionModel]
    prediction: str


class Corollary3Model(BaseModel):
    prediction: str
    passed: bool
    detail: str


class Corollary4Model(BaseModel):
    prediction: str
    passed: bool


class CellModel(BaseModel):
    vertices: list[list[float]]
    sign_vector: list[int]
    grad: list[float]
    constant: float
    direction: list[float] | None = None


class AdjacencyModel(BaseModel):
    i: int
    j: int
    line_index: int
    segment: list[list[float]]


class NeighborModel(BaseModel):
    valid: bool
    violations: list[str]
    pairs_checked: int


class TripleModel(BaseModel):
    points: list[list[float]]
    totals: list[float]


class AnalyzeRequest(BaseModel):
    scene: SceneModel
    tol: float | None = None
    samples: int = 1000
    seed: int = 0


class AnalyzeResponse(BaseModel):
    kind: str
    convexity: str
    reflex_vertices: list[int]
    classification: ClassificationModel | None = None
    cells: list[CellModel] | None = None
    neighbor: NeighborModel | None = None
    symmetry: SymmetryModel | None = None
    corollary3: Corollary3Model | None = None
    corollary4: Corollary4Model | None = None
    oracle: OracleModel
    status: str


class PartitionRequest(BaseModel):
    scene: SceneModel
    tol: float | None = None


class PartitionResponse(BaseModel):
    lines: list[list[float]]
    cells: list[CellModel]
    adjacency: list[AdjacencyModel]
    neighbor: NeighborModel
    triple: TripleModel


class SymmetryRequest(BaseModel):
    scene: SceneModel
    tol: float | None = None


class SymmetryResponse(BaseModel):
    kind: str
    symmetry: SymmetryModel | None = None
    corollary3: Corollary3Model | None = None
    corollary4: Corollary4Model | None = None
    classification: ClassificationModel | None = None


class RenderRequest(BaseModel):
    scene: SceneModel
    levels: int = 5
    tol: float | None = None


class RenderResponse(BaseModel):
    svg: str


class LPRequest(BaseModel):
    scene: SceneModel


class LPResponse(BaseModel):
    side_lengths: list[float]
    area: float
    text: str


class VerifyRequest(BaseModel):
    scene: SceneModel
    samples: int = 10000
    seed: int = 0
    tol: float | None = None


class VerifyResponse(BaseModel):
    samples: int
    seed: int
    tol: float
    max_residual: float
    passed: bool
