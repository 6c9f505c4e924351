"""Spatial primitives: convex polyhedra bounded by planar faces.

Each face lies on a plane ``alpha*x + beta*y + gamma*z + delta = 0`` with a
unit normal.  Faces are re-oriented outward at construction (mirroring the
CCW normalization of polygons), and the inward sign ``epsilon`` is anchored
at the vertex centroid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput, NotClosed, NotConvex
from .geometry import DEFAULT_TOL, Containment

Point3 = tuple[float, float, float]


@dataclass(frozen=True)
class BoundaryPlane:
    """Unit-normal carrier plane of a polyhedron face, with inward sign."""

    alpha: float
    beta: float
    gamma: float
    delta: float
    epsilon: int

    def value(self, p) -> float:
        return self.alpha * p[0] + self.beta * p[1] + self.gamma * p[2] + self.delta

    def inward_distance(self, p) -> float:
        return self.epsilon * self.value(p)

    @property
    def normal(self) -> np.ndarray:
        return np.array([self.alpha, self.beta, self.gamma])


def _newell_normal(pts: np.ndarray) -> np.ndarray:
    nxt = np.roll(pts, -1, axis=0)
    n = np.array(
        [
            np.sum((pts[:, 1] - nxt[:, 1]) * (pts[:, 2] + nxt[:, 2])),
            np.sum((pts[:, 2] - nxt[:, 2]) * (pts[:, 0] + nxt[:, 0])),
            np.sum((pts[:, 0] - nxt[:, 0]) * (pts[:, 1] + nxt[:, 1])),
        ]
    )
    return n


class Polyhedron:
    """Closed polyhedron from a vertex table and per-face vertex-index cycles.

    Validates planarity of every face, closedness (each edge shared by
    exactly two faces with opposite directions after outward orientation),
    and exposes the unit-normal boundary planes.  Functional operations
    additionally require convexity, checked via :meth:`is_convex`.
    """

    def __init__(self, vertices, faces, tol: float = DEFAULT_TOL):
        v = np.asarray(vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 3:
            raise DegenerateInput("polyhedron vertices must be an (n, 3) sequence")
        if not np.all(np.isfinite(v)):
            raise DegenerateInput("polyhedron vertices must be finite")
        if len(faces) < 4:
            raise DegenerateInput("polyhedron needs at least 4 faces")
        self._v = v
        self._v.flags.writeable = False
        self.tol = tol
        self._diag = float(np.linalg.norm(v.max(axis=0) - v.min(axis=0)))
        scale = max(1.0, self._diag)

        cleaned = []
        for fi, face in enumerate(faces):
            face = [int(i) for i in face]
            if len(face) < 3 or len(set(face)) != len(face):
                raise DegenerateInput(f"face {fi} must list >=3 distinct vertices")
            if min(face) < 0 or max(face) >= len(v):
                raise DegenerateInput(f"face {fi} references a missing vertex")
            cleaned.append(face)
        oriented = self._orient_outward(cleaned)

        planes = []
        for fi, face in enumerate(oriented):
            pts = v[face]
            normal = _newell_normal(pts)
            norm = float(np.linalg.norm(normal))
            if norm <= tol * scale**2:
                raise DegenerateInput(f"face {fi} is degenerate")
            normal = normal / norm
            delta = -float(normal @ pts.mean(axis=0))
            residual = np.abs(pts @ normal + delta).max()
            if residual > tol * scale:
                raise DegenerateInput(
                    f"face {fi} is not planar (max residual {residual:.3e})"
                )
            planes.append(
                BoundaryPlane(
                    float(normal[0]), float(normal[1]), float(normal[2]), delta, -1
                )
            )
        self.faces: tuple[tuple[int, ...], ...] = tuple(tuple(f) for f in oriented)
        self.planes: tuple[BoundaryPlane, ...] = tuple(planes)

    def _orient_outward(self, faces: list[list[int]]) -> list[list[int]]:
        """Flip face loops to one consistent orientation, outward by volume.

        Closedness is enforced along the way: every undirected edge must be
        shared by exactly two faces, and the two traversals must be opposite
        once faces are consistently oriented.
        """
        edge_faces: dict[tuple[int, int], list[int]] = {}
        for fi, face in enumerate(faces):
            for k, a in enumerate(face):
                b = face[(k + 1) % len(face)]
                edge_faces.setdefault((min(a, b), max(a, b)), []).append(fi)
        for edge, owners in edge_faces.items():
            if len(owners) != 2:
                raise NotClosed(
                    f"edge {edge} is shared by {len(owners)} faces, expected 2"
                )

        def directed_edges(face):
            return {(face[k], face[(k + 1) % len(face)]) for k in range(len(face))}

        flipped = [False] * len(faces)
        visited = [False] * len(faces)
        stack = [0]
        visited[0] = True
        while stack:
            fi = stack.pop()
            fdir = directed_edges(
                faces[fi][::-1] if flipped[fi] else faces[fi]
            )
            for a, b in fdir:
                owners = edge_faces[(min(a, b), max(a, b))]
                other = owners[0] if owners[1] == fi else owners[1]
                odir = directed_edges(
                    faces[other][::-1] if flipped[other] else faces[other]
                )
                # consistent orientation means the partner traverses (b, a)
                same = (a, b) in odir
                if not visited[other]:
                    flipped[other] = flipped[other] ^ same
                    visited[other] = True
                    stack.append(other)
                elif same:
                    raise NotClosed("surface orientation is inconsistent")
        if not all(visited):
            raise NotClosed("surface is not connected")

        oriented = [
            face[::-1] if flip else list(face) for face, flip in zip(faces, flipped)
        ]
        volume6 = 0.0
        for face in oriented:
            pts = self._v[face]
            for k in range(1, len(face) - 1):
                volume6 += float(np.dot(pts[0], np.cross(pts[k], pts[k + 1])))
        if volume6 < 0:
            oriented = [face[::-1] for face in oriented]
        return oriented

    @property
    def vertices(self) -> np.ndarray:
        return self._v

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def centroid(self) -> np.ndarray:
        return self._v.mean(axis=0)

    @property
    def bbox_diagonal(self) -> float:
        return self._diag

    @property
    def bounds(self) -> tuple[np.ndarray, np.ndarray]:
        return self._v.min(axis=0), self._v.max(axis=0)

    def is_convex(self, tol: float | None = None) -> bool:
        """Every vertex on the inward side of every face plane."""
        if tol is None:
            tol = self.tol
        scale = max(1.0, self._diag)
        for plane in self.planes:
            values = self._v @ plane.normal + plane.delta
            if values.max() > tol * scale:
                return False
        return True

    def require_convex(self, tol: float | None = None) -> None:
        if not self.is_convex(tol):
            raise NotConvex("operation requires a convex polyhedron")

    def inward_distances(self, pts: np.ndarray) -> np.ndarray:
        """(m, n_faces) matrix of signed inward distances (convex use)."""
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        normals = np.array([[pl.alpha, pl.beta, pl.gamma] for pl in self.planes])
        deltas = np.array([pl.delta for pl in self.planes])
        eps = np.array([pl.epsilon for pl in self.planes])
        return (pts @ normals.T + deltas) * eps

    def contains(self, p, tol: float | None = None) -> Containment:
        return self.contains_batch([p], tol)[0]

    def contains_batch(self, pts, tol: float | None = None) -> np.ndarray:
        """Convex containment via face-plane inward distances."""
        if tol is None:
            tol = self.tol
        self.require_convex(tol)
        dist = self.inward_distances(pts)
        m = dist.min(axis=1)
        out = np.full(len(dist), Containment.OUTSIDE, dtype=object)
        out[m >= -tol] = Containment.ON_BOUNDARY
        out[m > tol] = Containment.INSIDE
        return out

    def __repr__(self) -> str:
        return f"Polyhedron(n_vertices={len(self._v)}, n_faces={self.n_faces})"
