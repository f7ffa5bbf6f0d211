"""Obstruction theory for tangent bundles rescaled along a critical hypersurface.

Given a closed manifold with a marked critical hypersurface, the package
decides when the rescaled tangent bundle is isomorphic to the ordinary one
(a two-colorability question on the region graph), computes the rescaled
Euler number and verifies it against winding-number index sums, and works
out the sphere case explicitly through the degree of the reflection-valued
gluing map.
"""

from .bgraph import (
    BGraph,
    Coloring,
    HypersurfaceComponent,
    Region,
    TriangulatedSurface,
    ValidationReport,
    build_graph_from_surface,
    circle_graph,
    sphere_equator_graph,
    surface_euler,
    surface_orientable,
    validate_graph,
)
from .errors import (
    BTangentError,
    EvenDimensionError,
    ImproperColoringError,
    InconsistentGluingError,
    InvalidZError,
    ManifoldFormatError,
    NonClosedSurfaceError,
    NonConvergentError,
    NonTangentInputError,
    NonUnitInputError,
    NotColorableError,
    NotOrientableError,
    OddDimensionError,
    OutOfRangeError,
    UnsupportedDimensionError,
    ZeroOnContourError,
    ZeroOnCriticalSetError,
)
from .euler import EulerReport, b_euler_number, classical_euler_number, euler_report
from .manifold_io import BUNDLED_NAMES, bundled_path, load_manifold, parse_manifold
from .obstructions import (
    BmClass,
    ClassificationVerdict,
    EdgeVerdict,
    SignGluing,
    circle_criterion,
    classify_bm,
    edge_obstruction,
    equivalence_report,
    gauge_solvable,
    two_color,
)
from .spheremap import (
    CheckItem,
    CheckReport,
    SphereMapReport,
    cylinder_lift,
    cylinder_projection,
    degree_integral,
    degree_preimage,
    edge_homotopy_matrix,
    edge_homotopy_witness,
    homotopy_endpoints,
    local_trivialization_residual,
    north_pole,
    pole_map,
    pole_map_differential,
    reflection,
    rotation_from_pole,
    sphere_map_report,
    tangent_frame,
)
from .windex import (
    BPlaneField,
    ChartZero,
    IndexResult,
    PlaneField,
    VerificationReport,
    ZeroIndex,
    b_frame_index,
    default_center,
    named_b_field,
    named_field,
    sphere_height_example,
    verify_poincare_hopf,
    winding_index,
)

__version__ = "0.1.0"

__all__ = [
    "BGraph",
    "BPlaneField",
    "BTangentError",
    "BmClass",
    "BUNDLED_NAMES",
    "ChartZero",
    "CheckItem",
    "CheckReport",
    "ClassificationVerdict",
    "Coloring",
    "EdgeVerdict",
    "EulerReport",
    "EvenDimensionError",
    "HypersurfaceComponent",
    "ImproperColoringError",
    "InconsistentGluingError",
    "IndexResult",
    "InvalidZError",
    "ManifoldFormatError",
    "NonClosedSurfaceError",
    "NonConvergentError",
    "NonTangentInputError",
    "NonUnitInputError",
    "NotColorableError",
    "NotOrientableError",
    "OddDimensionError",
    "OutOfRangeError",
    "PlaneField",
    "Region",
    "SignGluing",
    "SphereMapReport",
    "TriangulatedSurface",
    "UnsupportedDimensionError",
    "ValidationReport",
    "VerificationReport",
    "ZeroIndex",
    "ZeroOnContourError",
    "ZeroOnCriticalSetError",
    "b_euler_number",
    "b_frame_index",
    "build_graph_from_surface",
    "bundled_path",
    "circle_criterion",
    "circle_graph",
    "classical_euler_number",
    "classify_bm",
    "cylinder_lift",
    "cylinder_projection",
    "degree_integral",
    "degree_preimage",
    "edge_homotopy_matrix",
    "edge_homotopy_witness",
    "edge_obstruction",
    "equivalence_report",
    "euler_report",
    "gauge_solvable",
    "homotopy_endpoints",
    "load_manifold",
    "local_trivialization_residual",
    "default_center",
    "named_b_field",
    "named_field",
    "north_pole",
    "parse_manifold",
    "pole_map",
    "pole_map_differential",
    "reflection",
    "rotation_from_pole",
    "sphere_equator_graph",
    "sphere_height_example",
    "sphere_map_report",
    "surface_euler",
    "surface_orientable",
    "tangent_frame",
    "two_color",
    "validate_graph",
    "verify_poincare_hopf",
    "winding_index",
]
