"""Shape dynamics of convex polygons driven by extremal circumscribed rectangles.

Each step circumscribes a rectangle of minimum aspect ratio, applies the
orthogonal affinity that turns it into a square and rescales to unit
diameter.  The package computes these steps, their closed forms on
triangles, invariance tests, cycle detection and phase-space scans.
"""

from .affinity import (AffineMap, apply_map, lambda_map, normalize,
                       orthogonal_affinity, similarity, squash_map)
from .calipers import (CircumRect, ExtremalSet, candidate_directions,
                       circumscribed_rectangle, extremal_rectangles, ratio_profile)
from .closedform import (LambdaRegime, Regime, boundary_param, classify_lambda_regime,
                         h0_hexagon, lambda_fixed_point, lambda_step,
                         lambda_triangle_map, t0_triangle, triangle_fixed_point,
                         triangle_map)
from .dynamics import (ALL_BRANCHES, DEFAULT_POLICY, CycleReport, Orbit, StepPolicy,
                       detect_cycle, invariance, invariance_report,
                       is_affinely_regular_hexagon, orbit, step, strong_invariance,
                       weak_invariance)
from .errors import (DegenerateInput, DomainError, InsufficientOrbit,
                     InternalInconsistency, InvalidParameter, NotATriangle,
                     NotInCanonicalFamily, NotOriginSymmetric, ParseError,
                     ShapeflowError, UnrealizableMeshpoint)
from .fixtures import sample_heptagon
from .polygeom import (ConvexPolygon, area, central_symmetral, centroid, diameter,
                       has_fourfold_symmetry, longest_chord_length,
                       make_convex_polygon, regular_polygon, support, width)
from .scan import (GridSpec, InscribedTriangle, PhasePortrait, cluster_points,
                   max_area_inscribed_triangle, phase_coordinates, realize_meshpoint,
                   scan_polygon_phase_space, scan_triangle_phase_space)
from .shapecmp import (ShapeClass, TriangleParam, canonical_triangle, canonicalize,
                       is_similar, shape_distance, triangle_param)

__version__ = "0.1.0"
