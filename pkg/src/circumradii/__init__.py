"""Exact-arithmetic tools for point sets whose triangles have distinct circumradii."""

from .exact_core import (
    INFINITE,
    DuplicatePoint,
    Mode,
    Point,
    PositionReport,
    concyclic,
    is_general_position,
    orientation,
    squared_area,
    squared_circumradius,
)
from .locus_curves import (
    IntersectionReport,
    IntersectionStatus,
    circle_poly,
    count_common_points,
    evaluate,
    radius_locus,
    resultant_eliminate_y,
    sturm_distinct_real_roots,
    total_degree,
)
from .polynomials import BivariatePoly, UnivariatePoly
from .radius_subsets import (
    Case,
    ExclusionRecord,
    NoCoincidence,
    NotGeneralPosition,
    SubsetCertificate,
    classify_excluded_point,
    greedy_maximal_subset,
    max_distinct_subset,
    triple_radius_table,
    verify_certificate,
)

__version__ = "0.1.0"
