"""Exact orientations of planar convex-set triples and abstract 3-orders."""

from .geom import (
    ConvexBody,
    GeometryError,
    Point,
    circle_polygon,
    common_intersection,
    convex_hull,
    intersect,
    orient_points,
    rational,
)
from .orient import (
    Family,
    OrientationError,
    family_profile,
    lines_to_t3o,
    points_to_p3o,
    triple_orientation,
)
from .p3o import (
    Containment,
    Law,
    TripleSystemError,
    TripleSystem,
    Violation,
    canonical_form,
    check_43,
    check_interior_transitivity,
    check_interiority,
    check_premise_free,
    check_zero_propagation,
    check_zero_propagation_general,
    containment,
    equivalent,
    is_p3o,
    is_t3o,
    make_system,
)
from .enumeration import (
    EnumerationReport,
    Group,
    Kind,
    enumerate_p3o,
    enumerate_point_order_types,
    enumerate_t3o,
    extend_duplicate,
    naive_filter_oracle,
)
from .constructions import (
    GalleryEntry,
    gallery,
    grid_hypergraph,
    inextendible_disks,
    pentagon_family,
    square_center_p3o,
)
from .analysis import (
    RealizationReport,
    ThrackleReport,
    ThrackleSearchResult,
    TraceDigraph,
    build_gd,
    check_thrackle_instance,
    max_zero_clique,
    search_thrackle_counterexample,
    shortest_directed_cycle,
    verify_realization,
)
from .files import (
    FileFormatError,
    load_family,
    load_system,
    save_family,
    save_system,
)
from .svg import RenderOptions, render_svg

__version__ = "0.1.0"
