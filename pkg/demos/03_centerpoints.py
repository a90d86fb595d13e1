"""
Tukey depth and centerpoints
============================

A family of single points has the same depth as the point set, so the
exact planar machinery also yields Tukey depth and a deepest point.
"""

import math

import numpy as np

from convex_depth import Family, PointSet, bbound_point, rado_centerpoint_2d, tukey_depth_2d

rng = np.random.default_rng(0)
S = PointSet(rng.normal(size=(25, 2)))
point, depth = rado_centerpoint_2d(S)
print(f"25 gaussian points: deepest {point.round(3)} depth {depth} "
      f"(guaranteed {math.ceil(25 / 3)})")
print("depth of the origin:", tukey_depth_2d(S, [0, 0]))

# pairwise intersecting squares: a centerpoint of the pairwise intersection
# points is deep for the squares themselves
sq = np.array([(0, 0), (1, 0), (1, 1), (0, 1)], dtype=float) - 0.5
F = Family([c + sq for c in rng.uniform(-0.3, 0.3, (5, 2))])
q, r = bbound_point(F, 2)
print(f"5 squares: point {q.round(3)} depth {r}; "
      f"C(r,2)={math.comb(r, 2)} >= C(5,2)/3={math.comb(5, 2) / 3:.2f}")
