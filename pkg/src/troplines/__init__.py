"""Exact computation with tropical line arrangements.

Stable tropical lines in the max-plus plane, stable intersections of
line pairs, dual Newton subdivisions of n * Delta_2 with face
classification, point-line duality with stable lines through point
configurations, and exhaustive or randomized verification sweeps for the
incidence bound b >= v - 3 (with the near-pencil characterization of
equality).
"""

from .arrangement import (
    Arrangement,
    CellClass,
    CellPolygon,
    Counts,
    VertexData,
    arrangement_vertices,
    build_arrangement,
    classify_cell,
    counts,
    dual_cell,
    type_tuple,
)
from .errors import (
    BudgetExhausted,
    DuplicateLine,
    EmptyArrangement,
    EqualPoints,
    GridTooSmall,
    IdenticalLines,
    InputFormatError,
    InvalidSweep,
    NotATriangle,
    NotAVertex,
    NotTransversal,
    RangeTooSmall,
    TilingFailure,
    TooFewPoints,
    TroplinesError,
)
from .incidence import (
    DbeVerdict,
    PointConfig,
    StableLineKind,
    StableLineRecord,
    dbe_check,
    dualize_points,
    incidence_preserved,
    ordinary_stable_lines,
    point_config,
    stable_line_two_points,
    stable_lines_through,
)
from .lines import (
    IntersectionKind,
    Point2,
    StableIntersectionResult,
    TropicalLine,
    line_from_coefficients,
    line_from_vertex,
    pairwise_stable_intersection,
)
from .subdivision import (
    DualSubdivision,
    check_regularity,
    determined_faces,
    determined_union_count,
    dual_subdivision,
    is_near_pencil,
)
from .sweep import (
    Exhaustive,
    Random,
    SweepParams,
    SweepReport,
    enumerate_configs,
    random_config,
    run_sweep,
    sg_failure_search,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "BudgetExhausted",
    "CellClass",
    "CellPolygon",
    "Counts",
    "DbeVerdict",
    "DualSubdivision",
    "DuplicateLine",
    "EmptyArrangement",
    "EqualPoints",
    "Exhaustive",
    "GridTooSmall",
    "IdenticalLines",
    "InputFormatError",
    "IntersectionKind",
    "InvalidSweep",
    "NotATriangle",
    "NotAVertex",
    "NotTransversal",
    "Point2",
    "PointConfig",
    "Random",
    "RangeTooSmall",
    "StableIntersectionResult",
    "StableLineKind",
    "StableLineRecord",
    "SweepParams",
    "SweepReport",
    "TilingFailure",
    "TooFewPoints",
    "TropicalLine",
    "TroplinesError",
    "VertexData",
    "arrangement_vertices",
    "build_arrangement",
    "check_regularity",
    "classify_cell",
    "counts",
    "dbe_check",
    "determined_faces",
    "determined_union_count",
    "dual_cell",
    "dual_subdivision",
    "dualize_points",
    "enumerate_configs",
    "incidence_preserved",
    "is_near_pencil",
    "line_from_coefficients",
    "line_from_vertex",
    "ordinary_stable_lines",
    "pairwise_stable_intersection",
    "point_config",
    "random_config",
    "run_sweep",
    "sg_failure_search",
    "stable_line_two_points",
    "stable_lines_through",
    "type_tuple",
    "__version__",
]
