"""Curves through boundary points of planar convex bodies.

Exact-predicate geometry on convex polygons, shortest paths through small
point sets, the four-point and support-normal constructions, Crofton length
estimates, explicit witness shapes, and a seeded verifier that checks the
associated length inequalities over random corpora.
"""

from .constructions import (
    FourPointWitness,
    SupportSelection,
    double_perimeter_bound,
    equal_arc_points,
    equal_arc_polygon,
    four_point_construction,
    support_normal_selection,
)
from .crofton import CroftonGrid, count_grid, crofton_dominance_check, crofton_length, default_grid, line_intersection_count
from .errors import (
    DegenerateInput,
    DegenerateShape,
    DegenerateTriangle,
    GeometryError,
    GridTooCoarse,
    InvalidShape,
    MissingAux,
    NotThin,
    OrderViolation,
    TooManyPoints,
    UnsupportedSpec,
)
from .geometry import (
    ConvexShape,
    DiameterResult,
    Polyline,
    boundary_line_intersections,
    contains_shape,
    convex_hull,
    diameter,
    orient2d,
    perimeter,
    support_point,
)
from .paths import PathResult, shortest_path_length, shortest_path_through, triangle_angle_ratio_check
from .reports import CSV_COLUMNS, CheckReport, reports_to_csv
from .shapes import (
    ShapeSpec,
    discretize,
    ellipse_perimeter_exact,
    exact_perimeter,
    half_ellipse_perimeter,
    load_shape,
    spec_from_dict,
)
from .verifier import (
    check_theorem,
    conjecture_search,
    corpus,
    derive_seed,
    maximin_point_selection,
    random_convex_polygon,
    random_covering_curve,
    random_vertex_curve,
)
from .witnesses import (
    adding_vertex_excess,
    chain_bound,
    lens_geometry,
    make_deltoid_pair,
    make_half_ellipse,
    make_half_ellipse_witness,
    make_lens,
    make_rectangle_witness,
)

__version__ = "0.1.0"
