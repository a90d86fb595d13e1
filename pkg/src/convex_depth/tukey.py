"""Classical Tukey depth of points, centerpoints and representative sets.

A family of singletons has the same depth function as the underlying point
set, so the planar routines here reuse the family machinery of
:mod:`convex_depth.depth` and :mod:`convex_depth.centers`.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .centers import max_depth_2d
from .depth import depth_exact_2d
from .geometry import Family, Polytope, intersection_point

__all__ = [
    "PointSet", "NotKIntersecting", "singleton_family", "tukey_depth_2d",
    "tukey_depth_2d_batch", "rado_centerpoint_2d", "sample_representatives",
    "representative_supremum_2d", "representative_grid_supremum_2d",
    "bbound_point",
]


class NotKIntersecting(ValueError):
    def __init__(self, subset):
        self.subset = tuple(subset)
        super().__init__(f"not k-intersecting {self.subset}")


@dataclass
class PointSet:
    points: np.ndarray

    def __post_init__(self):
        self.points = np.atleast_2d(np.asarray(self.points, dtype=float))
        if self.points.shape[0] == 0:
            raise ValueError("point set is empty")

    @property
    def dim(self):
        return self.points.shape[1]

    def __len__(self):
        return self.points.shape[0]

    def to_json(self):
        return {"dim": self.dim, "points": self.points.tolist()}

    @classmethod
    def from_json(cls, data):
        ps = cls(data["points"])
        if "dim" in data and int(data["dim"]) != ps.dim:
            raise ValueError(f"declared dim {data['dim']} but points have dim {ps.dim}")
        return ps


def singleton_family(S, tol=None):
    pts = S.points if isinstance(S, PointSet) else np.asarray(S, dtype=float)
    return Family([Polytope(pt[None, :]) for pt in pts], tol=tol)


def tukey_depth_2d(S, p):
    """Least number of points of ``S`` in a closed halfplane containing ``p``."""
    if S.dim != 2:
        raise ValueError("tukey_depth_2d needs planar points")
    return depth_exact_2d(singleton_family(S), p).value


def tukey_depth_2d_batch(points, p, tol=1e-9):
    """Tukey depth of ``p`` for a batch of point sets of shape ``(B, m, 2)``."""
    pts = np.asarray(points, dtype=float)
    off = pts - np.asarray(p, dtype=float)
    base = np.arctan2(off[..., 1], off[..., 0])
    ang = np.sort(np.mod(np.concatenate([base + np.pi / 2, base - np.pi / 2], axis=1),
                         2 * np.pi), axis=1)
    gaps = np.diff(np.concatenate([ang, ang[:, :1] + 2 * np.pi], axis=1), axis=1)
    allang = np.concatenate([ang, ang + gaps / 2], axis=1)
    U = np.stack([np.cos(allang), np.sin(allang)], axis=-1)
    proj = np.einsum("bkd,bmd->bkm", U, off)
    return (proj >= -tol).sum(axis=2).min(axis=1)


def rado_centerpoint_2d(S):
    """Deepest point of ``S`` and its Tukey depth (at least ``ceil(n/3)``)."""
    if S.dim != 2:
        raise ValueError("rado_centerpoint_2d needs planar points")
    depth, point = max_depth_2d(singleton_family(S))
    return point, depth


def sample_representatives(F, samples, seed=42):
    """``(samples, n, d)`` array: one random point per polytope per sample.

    Points are convex combinations with flat Dirichlet weights, so every point
    of each polytope has positive density.
    """
    rng = np.random.default_rng(seed)
    out = np.empty((samples, len(F), F.dim))
    for i, P in enumerate(F):
        w = rng.dirichlet(np.ones(len(P)), size=samples)
        out[:, i, :] = w @ P.vertices
    return out


def representative_supremum_2d(F, p, samples, seed=42, chunk=20000):
    """Best Tukey depth of ``p`` over sampled representative sets of ``F``."""
    if F.dim != 2:
        raise ValueError("representative_supremum_2d needs a planar family")
    if samples < 1:
        raise ValueError("need at least one sample")
    reps = sample_representatives(F, samples, seed)
    best = 0
    for lo in range(0, samples, chunk):
        best = max(best, int(tukey_depth_2d_batch(reps[lo:lo + chunk], p, F.tol).max()))
    return best


def representative_grid_supremum_2d(F, p, step=1e-2, chunk=100000):
    """Deterministic version for families of points and segments.

    Every segment is discretised at parameter spacing ``step`` (endpoints
    included) and all combinations of grid points are evaluated.
    """
    grids = []
    for P in F:
        uniq = np.unique(P.vertices, axis=0)
        if len(uniq) == 1:
            grids.append(uniq)
        elif len(uniq) == 2:
            t = np.linspace(0.0, 1.0, int(round(1 / step)) + 1)[:, None]
            grids.append(uniq[0] + t * (uniq[1] - uniq[0]))
        else:
            raise ValueError("grid enumeration supports points and segments only")
    sizes = [len(g) for g in grids]
    total = int(np.prod(sizes))
    best = 0
    for lo in range(0, total, chunk):
        idx = np.unravel_index(np.arange(lo, min(lo + chunk, total)), sizes)
        batch = np.stack([g[i] for g, i in zip(grids, idx)], axis=1)
        best = max(best, int(tukey_depth_2d_batch(batch, p, F.tol).max()))
    return best


def bbound_point(F, k):
    """Centerpoint of one intersection point per k-subset, with its depth.

    Returns ``(point, r)`` with ``r`` the exact depth of ``point`` in ``F``;
    ``C(r, k) >= C(n, k) / 3`` holds for k-intersecting planar families.
    """
    if F.dim != 2:
        raise ValueError("bbound_point needs a planar family")
    if not 1 <= k <= min(3, len(F)):
        raise ValueError(f"k={k} outside [1, {min(3, len(F))}]")
    pts = []
    for subset in itertools.combinations(range(len(F)), k):
        q = intersection_point([F[i] for i in subset])
        if q is None:
            raise NotKIntersecting(subset)
        pts.append([float(c) for c in q])
    point, _ = rado_centerpoint_2d(PointSet(pts))
    return point, depth_exact_2d(F, point).value
