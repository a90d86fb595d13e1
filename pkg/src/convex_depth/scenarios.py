"""Named families and the reproducible scenarios behind ``verify``."""

import math
from fractions import Fraction

import numpy as np

from .centers import max_depth_2d
from .depth import depth_exact_2d
from .geometry import Family
from .hitting import (BlemishParams, HittingInstance, beta_exhaustive_small,
                      beta_threshold_violations, blemish_feasible, blemish_optimize)
from .reduction import equivalence_roundtrip_2d
from .tukey import representative_grid_supremum_2d, representative_supremum_2d

__all__ = ["FIGURE1_CENTER", "build_figure1_family", "triangle_edge_family",
           "SCENARIOS", "run_scenario"]

FIGURE1_CENTER = np.array([1.5, math.sqrt(3) / 2])


def build_figure1_family():
    """Three sides of the side-3 equilateral triangle with unit disks removed
    around each corner.  Every halfplane through the center meets two of them,
    while no choice of one point per segment has Tukey depth 2 there.
    """
    h = math.sqrt(3) / 2
    return Family([
        [(1.0, 0.0), (2.0, 0.0)],
        [(2.5, h), (2.0, 2 * h)],
        [(1.0, 2 * h), (0.5, h)],
    ])


def triangle_edge_family():
    """Edges of the triangle (0,0), (1,0), (0,1); pairwise but not triple-wise
    intersecting."""
    return Family([[(0, 0), (1, 0)], [(1, 0), (0, 1)], [(0, 1), (0, 0)]])


def _figure1():
    F = build_figure1_family()
    depth = depth_exact_2d(F, FIGURE1_CENTER).value
    sampled = representative_supremum_2d(F, FIGURE1_CENTER, 2000)
    grid = representative_grid_supremum_2d(F, FIGURE1_CENTER, 1e-2)
    return {"depth_at_center": depth, "representative_sampled": sampled,
            "representative_grid": grid,
            "ok": depth == 2 and sampled == 1 and grid == 1}


def _triangle():
    depth, point = max_depth_2d(triangle_edge_family())
    return {"max_depth": depth, "point": point, "ok": depth == 2}


def _beta32():
    value = beta_exhaustive_small(3, 2, 6)
    violations = beta_threshold_violations(3, 2, 6, value)
    return {"beta": value, "above_threshold_without_hitting_set": violations,
            "ok": value == 1 / 3 and violations == 0}


def _roundtrip():
    report = equivalence_roundtrip_2d(HittingInstance(3, [[0], [1], [2]]), 2)
    return {"depth_ratio": report["depth_ratio"], "bound": report["bound"],
            "ok": report["depth_ratio"] == report["bound"]}


def _blemish():
    rows, ok = [], True
    for k in range(3, 31):
        beta = 1 - 15 ** (-1 / k)
        feasible = blemish_feasible(BlemishParams(2 * k, k, math.ceil(0.37 * k), beta))
        best = blemish_optimize(2 * k, k)[1]
        ok &= feasible and best <= beta + 1e-12
        rows.append({"k": k, "beta": beta, "feasible": feasible, "optimized": best})
    # the proof compares (ell + 1) / m, not ell / m, against 0.185
    lhs_ok = all((Fraction(37, 100) * k + 1) / (2 * k) > Fraction(185, 1000) for k in range(3, 31))
    ok &= 15 ** -0.63 < 0.182 and lhs_ok
    literal = Fraction(37, 100) / 2 > Fraction(185, 1000)
    return {"rows": rows, "rhs_below_0.182": 15 ** -0.63 < 0.182,
            "lhs_above_0.185": lhs_ok, "literal_0.37/2_gt_0.185": literal, "ok": ok}


SCENARIOS = {
    "figure1": _figure1,
    "triangle": _triangle,
    "beta32": _beta32,
    "roundtrip": _roundtrip,
    "blemish": _blemish,
}


def run_scenario(name):
    if name == "all":
        results = {key: fn() for key, fn in SCENARIOS.items()}
        return {"scenarios": results, "ok": all(r["ok"] for r in results.values())}
    if name not in SCENARIOS:
        raise ValueError(f"unknown scenario {name!r}; choose from {sorted(SCENARIOS)} or 'all'")
    return SCENARIOS[name]()
