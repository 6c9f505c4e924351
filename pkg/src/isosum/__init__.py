"""isosum: distance-sum functionals of polygons and convex polyhedra.

The sum V of distances from an interior point to all sides (faces) of a
convex region is affine, so it is either constant over the region or
constant exactly on a family of parallel segments (cross sections).  This
package builds V, classifies it, clips its level sets, partitions concave
polygons into convex cells with per-cell functionals, detects polygon
symmetries, and exposes the triangle linear-program correspondence -- all
cross-checked against a direct geometric oracle.
"""

__version__ = "0.1.0"

from .errors import (
    CVSRegion,
    DegenerateInput,
    IsosumError,
    NoInteriorEdge,
    NotClosed,
    NotConcave,
    NotConvex,
    OutsideRegion,
    ParseError,
    ValidationError,
)
from .geometry import (
    DEFAULT_TOL,
    BoundaryLine,
    Containment,
    Convexity,
    ConvexityReport,
    Polygon,
    boundary_line_of_edge,
    contains,
    is_convex,
    orient_ccw,
    signed_inward_distance,
)
from .polyhedra import BoundaryPlane, Polyhedron
from .functional import (
    AffineFunctional2,
    AffineFunctional3,
    Classification,
    DistanceProfile,
    QuadVerdict,
    TripleVerdict,
    Verdict,
    classify,
    distance_profile,
    four_point_cvs_test,
    functional2,
    functional3,
    isosum_segment,
    three_point_cvs_test,
)
from .partition import (
    Adjacency,
    Partition,
    PartitionCell,
    SignVector,
    cell_functional,
    equal_sum_triple,
    neighbor_check,
    partition,
)
from .symmetry import (
    PredictionKind,
    Reflection2,
    Rotation2,
    RotationAxis3,
    SymmetryReport,
    check_corollary3,
    detect_symmetries,
    predict_corollary4,
)
from .lp import (
    LPProblem,
    SimplexPoint,
    barycentric_normalize,
    check_duality,
    export_lp_text,
    parse_lp_text,
    triangle_to_lp,
)
from .scene import Scene, parse_scene, scene_from_obj, serialize_scene
from .analysis import (
    AnalysisReport,
    OracleSummary,
    analyze_scene,
    verify_scene,
)
from .render import render_svg

__all__ = [name for name in dir() if not name.startswith("_")]
