"""Depth of points with respect to finite families of convex polytopes.

Exact planar depth, planks and r-centers, simplex witnesses, Tukey depth and
centerpoints, hitting-set thresholds and the face-family reduction linking
them.
"""

from .centers import (CenterRegionApprox, Plank, SimplexWitness, TripleConditionError,
                      WitnessNotFound, center_region_2d, compute_plank,
                      holmsen_depth_check, max_depth_2d, r_center_polygon_2d,
                      simplex_witness_2d)
from .depth import (DepthCertificate, SupportProfile, depth_exact_2d, depth_sampled_upper,
                    depth_upper_at, halfspace_hit_count, min_transversal_count_2d,
                    support_profile)
from .geometry import (Family, Halfspace, LPError, Polytope, halfspace_contains,
                       halfspace_intersects, intersection_point, is_k_intersecting,
                       polytopes_intersect, support)
from .hitting import (BlemishParams, HittingInstance, HittingResult, beta_exhaustive_small,
                      beta_threshold_violations, blemish_feasible, blemish_margin,
                      blemish_optimize, bounds_table, complement_instance,
                      instance_beta_ratio, min_hitting_set)
from .reduction import (ReductionFamily, equivalence_roundtrip_2d, hitting_to_family,
                        shallow_family_to_instance_2d, verify_intersection_pattern)
from .scenarios import build_figure1_family, triangle_edge_family
from .tukey import (PointSet, bbound_point, rado_centerpoint_2d, representative_grid_supremum_2d,
                    representative_supremum_2d, tukey_depth_2d)

__version__ = "0.1.0"
