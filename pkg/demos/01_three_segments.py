"""
Depth is more than the Tukey depth of representatives
======================================================

Three segments left over from the sides of a triangle after cutting away a
unit disk around each corner.  Every halfplane through the center meets two
of them, yet no choice of one point per segment puts the center at Tukey
depth 2.
"""

from convex_depth import (build_figure1_family, depth_exact_2d,
                          representative_grid_supremum_2d, representative_supremum_2d)
from convex_depth.scenarios import FIGURE1_CENTER

F = build_figure1_family()
for P in F:
    print("segment", P.vertices.round(4).tolist())

# exact depth by rotating a halfplane around the center
cert = depth_exact_2d(F, FIGURE1_CENTER)
print("depth at center:", cert.value, "attained by normal", cert.witness_direction.round(4))

# best Tukey depth over representative triples: random, then on a 1e-2 grid
print("sampled representatives:", representative_supremum_2d(F, FIGURE1_CENTER, 2000))
print("grid representatives:   ", representative_grid_supremum_2d(F, FIGURE1_CENTER, 1e-2))
