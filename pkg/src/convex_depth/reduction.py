"""Translating between hitting instances and families of simplex faces.

Given ``d + 1`` subsets ``A_1..A_{d+1}`` of a ground set, every element
``x`` becomes the face of a fixed simplex spanned by the vertices ``P_j``
with ``x not in A_j``.  A k-subset of elements has a common point exactly
when its index sets do not cover all of ``[d+1]``, i.e. when it is not a
hitting set.  The opposite direction turns three empty plank halfplanes of
a shallow planar family into the subsets "members contained in H_i".
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .centers import SimplexWitness, max_depth_2d, simplex_witness_2d
from .geometry import Family, Polytope, halfspace_contains, polytopes_intersect
from .hitting import HittingInstance, min_hitting_set

__all__ = [
    "ReductionFamily", "ReductionError", "standard_simplex",
    "hitting_to_family", "verify_intersection_pattern",
    "shallow_family_to_instance_2d", "equivalence_roundtrip_2d",
]


class ReductionError(ValueError):
    pass


def standard_simplex(d):
    """Origin and the ``d`` unit points, translated to barycenter 0 (exact)."""
    pts = [[Fraction(0)] * d] + [[Fraction(int(i == j)) for i in range(d)] for j in range(d)]
    center = [sum(p[i] for p in pts) / (d + 1) for i in range(d)]
    return [tuple(p[i] - center[i] for i in range(d)) for p in pts]


@dataclass
class ReductionFamily:
    """Faces ``F_x = conv{P_j : j not in I_x}`` of a simplex.

    ``index_sets[x]`` is ``I_x`` as a frozenset of 0-based simplex indices.
    """
    d: int
    simplex: list
    index_sets: list

    def __post_init__(self):
        arr = np.array([[float(c) for c in p] for p in self.simplex])
        if arr.shape != (self.d + 1, self.d):
            raise ValueError("simplex needs d + 1 points in R^d")
        if np.linalg.matrix_rank(arr[1:] - arr[0]) != self.d:
            raise ValueError("simplex vertices are affinely dependent")
        full = frozenset(range(self.d + 1))
        for I in self.index_sets:
            if I == full:
                raise ReductionError("element hits all subsets")

    def face(self, x):
        I = self.index_sets[x]
        return Polytope([self.simplex[j] for j in range(self.d + 1) if j not in I])

    @property
    def family(self):
        return Family([self.face(x) for x in range(len(self.index_sets))])

    def to_json(self):
        data = self.family.to_json()
        sidecar = {"I": {str(x + 1): sorted(i + 1 for i in I)
                         for x, I in enumerate(self.index_sets)}}
        return data, sidecar


def hitting_to_family(inst, d):
    """Face family in ``R^d`` for an instance with ``m = d + 1`` subsets."""
    if inst.m != d + 1:
        raise ValueError(f"need m = d + 1 subsets, got m={inst.m}, d={d}")
    index_sets = [frozenset(i for i, A in enumerate(inst.subsets) if x in A)
                  for x in range(inst.ground_size)]
    return ReductionFamily(d, standard_simplex(d), index_sets)


def verify_intersection_pattern(rf, k, checks=20, seed=42):
    """Is the face family k-intersecting?

    Decided combinatorially (no k elements cover every simplex index), with
    ``checks`` random k-subsets re-checked by LP; any disagreement raises.
    """
    n = len(rf.index_sets)
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside [1, {n}]")
    full = frozenset(range(rf.d + 1))
    subsets = list(itertools.combinations(range(n), k))
    pattern = {Y: frozenset().union(*(rf.index_sets[x] for x in Y)) != full for Y in subsets}
    rng = random.Random(seed)
    for Y in rng.sample(subsets, min(checks, len(subsets))):
        if polytopes_intersect([rf.face(x) for x in Y]) != pattern[Y]:
            raise ReductionError(f"combinatorial/geometric disagreement on {Y}")
    return all(pattern.values())


def shallow_family_to_instance_2d(F, r, resolution=720, return_witness=False):
    """Hitting instance on ``range(n)`` from three empty witness halfplanes.

    Requires that no point has depth ``r``; subset ``i`` lists the members
    contained in witness halfplane ``i`` and has more than ``n - r`` elements.
    """
    found = simplex_witness_2d(F, r, resolution)
    if not isinstance(found, SimplexWitness):
        raise ReductionError(f"a point of depth >= {r} exists at {np.round(found, 12).tolist()}")
    subsets = [[j for j, P in enumerate(F) if halfspace_contains(H, P, F.tol)]
               for H in found.halfspaces]
    inst = HittingInstance(len(F), subsets)
    return (inst, found) if return_witness else inst


def equivalence_roundtrip_2d(inst, k):
    """Build the planar face family of a 3-subset instance and check its depth.

    The instance must have no hitting set of size ``k``.  The report holds the
    family, the pattern check and the depth bound
    ``max_depth / n <= 1 - min|A_i| / N``; failed checks raise.
    """
    if inst.m != 3:
        raise ValueError("planar roundtrip needs exactly 3 subsets")
    hs = min_hitting_set(inst)
    if hs.min_size <= k:
        raise ReductionError(f"instance has a hitting set of size {hs.min_size} <= k={k}")
    rf = hitting_to_family(inst, 2)
    if not verify_intersection_pattern(rf, k):
        raise ReductionError("constructed family is not k-intersecting")
    F = rf.family
    depth, point = max_depth_2d(F)
    ratio = Fraction(depth, len(F))
    bound = 1 - inst.min_ratio()
    if ratio > bound:
        raise ReductionError(f"depth ratio {ratio} exceeds 1 - beta = {bound}")
    return {
        "instance": inst.to_json(),
        "k": k,
        "min_hitting_set": hs.min_size,
        "family": F.to_json(),
        "index_sets": {str(x + 1): sorted(i + 1 for i in I) for x, I in enumerate(rf.index_sets)},
        "k_intersecting": True,
        "max_depth": depth,
        "deepest_point": point.tolist(),
        "n": len(F),
        "depth_ratio": ratio,
        "beta_ratio": inst.min_ratio(),
        "bound": bound,
    }
