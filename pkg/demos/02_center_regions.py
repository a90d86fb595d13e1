"""
r-centers of the triangle edges
===============================

The three edges of a triangle meet pairwise but not all together.  Points
of depth 2 exist; depth 3 is impossible, and three halfplanes prove it.
"""

import sys

from convex_depth import (center_region_2d, max_depth_2d, simplex_witness_2d,
                          triangle_edge_family)
from convex_depth.io import region_svg

T = triangle_edge_family()

depth, point = max_depth_2d(T)
print("max depth", depth, "at", point.round(4))

# planks sampled at 360 directions bound the r-center from outside
for r in (1, 2, 3):
    reg = center_region_2d(T, r, 360)
    print(f"r={r}: empty={reg.empty_flag} outer vertices={len(reg.outer_polygon)} "
          f"certified={len(reg.certified_points)}")

# no point of depth 3: the witness is three halfplanes with nothing in common
w = simplex_witness_2d(T, 3)
for h, c in zip(w.halfspaces, w.contain_counts):
    print("halfplane normal", h.normal.round(4), "offset", round(h.offset, 6), "contains", c)

# pass a path to write the depth-2 region as SVG
if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(region_svg(center_region_2d(T, 2, 360), T, debug_planks=True))
    print("wrote", sys.argv[1])
