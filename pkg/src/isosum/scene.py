"""Scene files: the JSON surface of the library.

Two kinds are accepted::

    {"kind": "polygon2",   "vertices": [[x, y], ...]}
    {"kind": "polyhedron3", "vertices": [[x, y, z], ...],
     "faces": [[i, j, k, ...], ...],
     "symmetry_axes": [{"point": [x, y, z], "direction": [x, y, z]}, ...]}

``symmetry_axes`` is optional and declares rotational symmetry axes for the
polyhedron prediction rule.  Numbers must be plain JSON numerals.  Parsing
raises :class:`ParseError` with line/column for syntax problems and
:class:`ValidationError` naming the violated invariant otherwise.
Serialization uses shortest round-trip floats so that
``parse_scene(serialize_scene(s))`` reproduces ``s`` bit-exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DegenerateInput, NotClosed, ParseError, ValidationError
from .geometry import DEFAULT_TOL, Polygon, orient_ccw
from .polyhedra import Polyhedron
from .symmetry import RotationAxis3

POLYGON2 = "polygon2"
POLYHEDRON3 = "polyhedron3"


@dataclass(frozen=True)
class Scene:
    kind: str
    vertices: tuple[tuple[float, ...], ...]
    faces: tuple[tuple[int, ...], ...] | None = None
    symmetry_axes: tuple[RotationAxis3, ...] = field(default_factory=tuple)

    def to_polygon(self, tol: float = DEFAULT_TOL) -> Polygon:
        if self.kind != POLYGON2:
            raise ValidationError(f"scene kind {self.kind!r} is not a polygon")
        return orient_ccw(Polygon(self.vertices, tol=tol))

    def to_polyhedron(self, tol: float = DEFAULT_TOL) -> Polyhedron:
        if self.kind != POLYHEDRON3:
            raise ValidationError(f"scene kind {self.kind!r} is not a polyhedron")
        return Polyhedron(self.vertices, self.faces, tol=tol)


def _require_number(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{what} must be a plain numeral, got {value!r}")
    return float(value)


def _vertex_list(raw, dim: int) -> tuple[tuple[float, ...], ...]:
    if not isinstance(raw, list) or not raw:
        raise ValidationError("'vertices' must be a non-empty list")
    out = []
    for k, item in enumerate(raw):
        if not isinstance(item, list) or len(item) != dim:
            raise ValidationError(
                f"vertex {k} must be a list of {dim} coordinates"
            )
        out.append(tuple(_require_number(x, f"vertex {k} coordinate") for x in item))
    return tuple(out)


def scene_from_obj(obj) -> Scene:
    """Validate a decoded JSON object into a Scene (geometry included)."""
    if not isinstance(obj, dict):
        raise ValidationError("scene must be a JSON object")
    kind = obj.get("kind")
    if kind == POLYGON2:
        verts = _vertex_list(obj.get("vertices"), 2)
        if len(verts) < 3:
            raise ValidationError("polygon2 scene requires at least 3 vertices")
        scene = Scene(POLYGON2, verts)
    elif kind == POLYHEDRON3:
        verts = _vertex_list(obj.get("vertices"), 3)
        raw_faces = obj.get("faces")
        if not isinstance(raw_faces, list) or not raw_faces:
            raise ValidationError("polyhedron3 scene requires a 'faces' list")
        faces = []
        for k, f in enumerate(raw_faces):
            if not isinstance(f, list) or len(f) < 3:
                raise ValidationError(f"face {k} must list at least 3 vertex indices")
            if not all(isinstance(i, int) and not isinstance(i, bool) for i in f):
                raise ValidationError(f"face {k} must contain integer indices")
            faces.append(tuple(f))
        axes = []
        for k, ax in enumerate(obj.get("symmetry_axes") or []):
            if (
                not isinstance(ax, dict)
                or "point" not in ax
                or "direction" not in ax
            ):
                raise ValidationError(
                    f"symmetry axis {k} must have 'point' and 'direction'"
                )
            point = tuple(
                _require_number(x, f"axis {k} point") for x in ax["point"]
            )
            direction = tuple(
                _require_number(x, f"axis {k} direction") for x in ax["direction"]
            )
            if len(point) != 3 or len(direction) != 3:
                raise ValidationError(f"symmetry axis {k} must be 3-dimensional")
            axes.append(RotationAxis3(point, direction))
        scene = Scene(POLYHEDRON3, verts, tuple(faces), tuple(axes))
    else:
        raise ValidationError(
            f"scene 'kind' must be '{POLYGON2}' or '{POLYHEDRON3}', got {kind!r}"
        )
    # run geometric validation eagerly so bad scenes fail at the door
    try:
        if kind == POLYGON2:
            scene.to_polygon()
        else:
            scene.to_polyhedron()
    except (DegenerateInput, NotClosed) as exc:
        raise ValidationError(str(exc)) from exc
    return scene


def parse_scene(text: str) -> Scene:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return scene_from_obj(obj)


def serialize_scene(scene: Scene) -> str:
    obj: dict = {"kind": scene.kind, "vertices": [list(v) for v in scene.vertices]}
    if scene.kind == POLYHEDRON3:
        obj["faces"] = [list(f) for f in scene.faces]
        if scene.symmetry_axes:
            obj["symmetry_axes"] = [
                {"point": list(ax.point), "direction": list(ax.direction)}
                for ax in scene.symmetry_axes
            ]
    return json.dumps(obj, indent=2) + "\n"
