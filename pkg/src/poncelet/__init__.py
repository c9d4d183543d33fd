"""Circle-inscribed Poncelet triangle families and their center loci.

The package builds triangle families inscribed in the unit circle from a
pair of caustic foci, decides equilateral containment, computes the triangle
centers driving the Kiepert in-parabola, and numerically verifies the
stationarity and locus claims about them.
"""

from .geom import (
    DEGENERACY_TOL,
    UNIT_CIRCLE,
    CircleG,
    ConicQ,
    EllipseG,
    GeometryError,
    HLine,
    ParabolaG,
    Triangle,
    conic_to_geometric,
    external_bisector,
    line_conic_tangency_residual,
    polar_image_of_conic,
    polar_line,
    pole,
    ray_circle_intersection,
    reflect_point_in_line,
    rotate_about,
)
from .family import (
    FamilyConfig,
    caustic_of,
    config_from_center_and_equilateral_vertex,
    config_from_triangle_and_center,
    contains_equilateral,
    cubic_roots,
    equilateral_lambda,
    equilateral_vertices,
    inconic_with_center,
    stationary_x110_prediction,
    triangle_at,
    vertices_at,
)
from .centers import (
    CenterIndex,
    classical_centers,
    center_point,
    contact_triangle,
    euler_line,
    kiepert_parabola,
    parabola_vertex,
    tangential_triangle,
    x11_feuerbach,
    x65,
    x74,
    x110,
    x1511,
)
from .dual import (
    DualFamilySample,
    dual_contains_equilateral,
    outer_conic_of,
    tangential_family_at,
)
from .experiments import (
    REFERENCE_CONFIG,
    CircleFitResult,
    PropositionReport,
    StationarityReport,
    SweepResult,
    fit_circle,
    stationarity,
    sweep,
    verify_all,
)

__version__ = "0.1.0"
