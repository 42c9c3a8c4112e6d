"""Closed geodesics on doubled regular polygons and the doubled disk."""

from .surface import (
    DiskSurface,
    EdgeLocation,
    Face,
    PolygonSurface,
    Surface,
    SurfacePoint,
    canonical_boundary,
    edge_point,
    metrics,
)
from .tracer import (
    DiskGeodesic,
    GeodesicPath,
    Hit,
    TraceError,
    canonicalize_to_midpoint,
    make_disk_geodesic,
    make_special,
    path_from_json,
    path_to_json,
    skip_numbers,
    trace,
    vertex_ratios,
    winding,
)
from .metric import (
    DistanceResult,
    diameter,
    distance,
    distance_fast,
    distance_many,
    mesh_oracle,
)
from .minind import (
    MinindReport,
    analytic_bounds,
    converge_bound,
    is_minimizing_arc,
    max_uniform_arc,
    minimizing_index,
    minind_of_surface,
    vshape_bound,
)
from .asymptotics import (
    LimitProfile,
    SkipFamily,
    VSHAPE_FAMILY,
    alternating_partials,
    check_limit_identities,
    detect_convergence,
    development_angle,
    divergence_experiment,
    vertex_ratio_limits,
    vertex_ratio_step,
)
from .spectra import (
    SearchConfig,
    SpectrumEntry,
    find_closed_geodesics,
    ratio_table,
    shortest_closed_geodesic,
    winding_profile,
)
from .svgfig import KINDS, RenderSpec, render_svg

__version__ = "0.1.0"
