"""
How large must m sets be before k elements hit them all?
========================================================

Exhaustive search over tiny ground sets, extremal constructions, and the
probabilistic bound that samples k - ell elements and patches the rest.
"""

import math

from convex_depth import (BlemishParams, HittingInstance, beta_exhaustive_small,
                          blemish_feasible, blemish_optimize, complement_instance,
                          min_hitting_set)
from convex_depth.hitting import bounds_table, bounds_table_csv

print("A_i = {i} over [3]:", min_hitting_set(HittingInstance(3, [[0], [1], [2]])).min_size)

# every tuple of 3 subsets of [N], N <= 6
print("threshold for m=3, k=2:", beta_exhaustive_small(3, 2, 6))
print("threshold for m=2, k=1:", beta_exhaustive_small(2, 1, 4))

inst = complement_instance(6, 2)
print(f"all 4-subsets of [6]: {inst.m} sets, min hitting set {min_hitting_set(inst).min_size}")

for k in (3, 10, 30):
    beta = 1 - 15 ** (-1 / k)
    ok = blemish_feasible(BlemishParams(2 * k, k, math.ceil(0.37 * k), beta))
    ell, best = blemish_optimize(2 * k, k)
    print(f"k={k}: 1-15^(-1/k)={beta:.4f} feasible={ok}  optimum ell={ell} beta={best:.4f}")

print(bounds_table_csv(bounds_table(3)))
