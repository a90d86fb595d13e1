"""Planks, r-center regions, deepest points and simplex witnesses (planar).

For a direction ``u`` the level-``r`` plank is ``{x : a <= <u, x> <= b}``
where ``a`` is the r-th smallest of the per-set minima of ``<u, .>`` and
``b`` the r-th largest of the maxima.  A point has depth at least ``r``
exactly when it lies in the plank of every direction, so the r-center is
the intersection of all planks.

Restricted to directions between two consecutive "critical" directions
(normals of lines through two vertices of the family) the order of all
vertex projections is fixed, hence the lower plank boundary is a halfplane
through one fixed vertex.  Intersecting the planks at the critical
directions and one direction inside every gap therefore gives the r-center
itself, not just an outer approximation.  :func:`r_center_polygon_2d`
relies on this; :func:`center_region_2d` keeps the plain uniformly sampled
outer approximation.
"""

import itertools
import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

from .depth import _projections, _unit, depth_exact_2d, sweep_directions_2d
from .geometry import (Halfspace, LPError, Polytope, _check_dim,
                       halfspace_contains, polytopes_intersect)

logger = logging.getLogger(__name__)

__all__ = [
    "Plank", "CenterRegionApprox", "SimplexWitness", "WitnessNotFound",
    "TripleConditionError", "compute_plank", "plank_offsets",
    "critical_directions_2d", "clip_halfplanes", "r_center_polygon_2d",
    "center_region_2d", "max_depth_2d", "simplex_witness_2d",
    "halfplanes_empty", "holmsen_depth_check",
]

WITNESS_INFLATION = 1e-6


class WitnessNotFound(RuntimeError):
    """No empty triple of plank halfplanes at the configured resolution."""


class TripleConditionError(ValueError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__(f"triple condition violated {self.triple}")


@dataclass(frozen=True)
class Plank:
    """``{x : <direction, x> in interval}``; ``interval`` is ``None`` if empty."""
    direction: np.ndarray
    interval: tuple = None

    @property
    def empty(self):
        return self.interval is None

    def contains(self, x, tol=1e-9):
        if self.interval is None:
            return False
        t = float(np.dot(self.direction, x))
        a, b = self.interval
        return a - tol <= t <= b + tol


@dataclass
class CenterRegionApprox:
    r: int
    outer_polygon: np.ndarray
    certified_points: np.ndarray
    empty_flag: bool
    planks: list = field(default_factory=list, repr=False, compare=False)

    def to_json(self):
        return {
            "r": int(self.r),
            "outer_polygon": np.asarray(self.outer_polygon).tolist(),
            "certified": np.asarray(self.certified_points).tolist(),
            "empty": bool(self.empty_flag),
        }

    @classmethod
    def from_json(cls, data):
        return cls(int(data["r"]),
                   np.asarray(data["outer_polygon"], dtype=float).reshape(-1, 2),
                   np.asarray(data["certified"], dtype=float).reshape(-1, 2),
                   bool(data["empty"]))

    def __eq__(self, other):
        if not isinstance(other, CenterRegionApprox):
            return NotImplemented
        return (self.r == other.r and self.empty_flag == other.empty_flag
                and np.array_equal(self.outer_polygon, other.outer_polygon)
                and np.array_equal(self.certified_points, other.certified_points))


@dataclass
class SimplexWitness:
    """``d + 1`` halfspaces with empty intersection, each containing many sets."""
    halfspaces: list
    contain_counts: list


def plank_offsets(F, U, r):
    """Lower/upper plank bounds ``(a, b)`` for every row of ``U``."""
    n = len(F)
    if not 1 <= r <= n:
        raise ValueError(f"r={r} outside [1, {n}]")
    mins, maxs = _projections(F, U)
    a = np.sort(mins, axis=0)[r - 1]
    b = np.sort(maxs, axis=0)[n - r]
    return a, b


def compute_plank(F, u, r):
    u = _unit(u)
    _check_dim(F.dim, u.shape[0])
    a, b = plank_offsets(F, u[None, :], r)
    a, b = float(a[0]), float(b[0])
    if a > b + F.tol:
        return Plank(u, None)
    return Plank(u, (min(a, b), max(a, b)))


def critical_directions_2d(F):
    """Normals of all vertex-pair lines and one direction inside each gap."""
    verts, _ = F.stacked()
    uniq = np.unique(verts, axis=0)
    if len(uniq) < 2:
        return np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]])
    i, j = np.triu_indices(len(uniq), k=1)
    # sweep_directions_2d returns both the normals to the pair differences
    # and the midpoints of the arcs between them
    return sweep_directions_2d(uniq[j] - uniq[i])


def _bbox(F, pad=1.0):
    verts, _ = F.stacked()
    lo, hi = verts.min(axis=0), verts.max(axis=0)
    pad = pad + 0.01 * float(np.max(hi - lo))
    return np.array([[lo[0] - pad, lo[1] - pad], [hi[0] + pad, lo[1] - pad],
                     [hi[0] + pad, hi[1] + pad], [lo[0] - pad, hi[1] + pad]])


def _clip(poly, normal, offset, eps):
    """Sutherland-Hodgman step: keep ``<normal, x> >= offset - eps``."""
    if len(poly) == 0:
        return poly
    s = poly @ normal - offset
    inside = s >= -eps
    if inside.all():
        return poly
    if not inside.any():
        return poly[:0]
    nxt = np.roll(poly, -1, axis=0)
    s_next = np.roll(s, -1)
    crossing = inside != np.roll(inside, -1)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(crossing, s / (s - s_next), 0.0)
    cut = poly + t[:, None] * (nxt - poly)
    # vertex i (if kept) is followed by the crossing point on edge (i, i+1)
    cand = np.stack([poly, cut], axis=1).reshape(-1, 2)
    keep = np.stack([inside, crossing], axis=1).reshape(-1)
    return cand[keep]


def clip_halfplanes(start, normals, offsets, eps=1e-9):
    """Intersect the convex polygon ``start`` with halfplanes ``<n, x> >= c``."""
    poly = np.asarray(start, dtype=float)
    for nrm, c in zip(normals, offsets):
        poly = _clip(poly, nrm, c, eps)
        if len(poly) == 0:
            break
    return _dedupe(poly, eps)


def _dedupe(poly, eps):
    """Drop cyclically consecutive vertices closer than ``eps``."""
    if len(poly) < 2:
        return poly
    keep = [poly[0]]
    for q in poly[1:]:
        if np.linalg.norm(q - keep[-1]) > eps:
            keep.append(q)
    if len(keep) > 1 and np.linalg.norm(keep[0] - keep[-1]) <= eps:
        keep.pop()
    return np.array(keep)


def _polygon_centroid(poly):
    if len(poly) < 3:
        return poly.mean(axis=0)
    x, y = poly[:, 0], poly[:, 1]
    xs, ys = np.roll(x, -1), np.roll(y, -1)
    cross = x * ys - xs * y
    area = cross.sum() / 2
    if abs(area) < 1e-14:
        return poly.mean(axis=0)
    return np.array([((x + xs) * cross).sum(), ((y + ys) * cross).sum()]) / (6 * area)


def r_center_polygon_2d(F, r):
    """Vertices of the r-center ``{p : depth(p) >= r}`` (empty array if empty)."""
    if F.dim != 2:
        raise ValueError("r-center polygons are only computed in the plane")
    U = critical_directions_2d(F)
    a, _ = plank_offsets(F, U, r)
    scale = max(1.0, float(np.abs(F.stacked()[0]).max()))
    return clip_halfplanes(_bbox(F), U, a, eps=F.tol * scale)


def _certify(F, poly, r):
    """First point of ``poly`` (centroid, then vertices) with depth >= r."""
    if len(poly) == 0:
        return None
    for q in [_polygon_centroid(poly), poly.mean(axis=0), *poly]:
        cert = depth_exact_2d(F, q)
        if cert.value >= r:
            return q, cert.value
    logger.debug("r-center for r=%d nonempty but no vertex certified", r)
    return None


def max_depth_2d(F):
    """Maximum depth over the plane and a point attaining it."""
    if F.dim != 2:
        raise ValueError("max_depth_2d needs a planar family")
    n = len(F)
    best = _certify(F, r_center_polygon_2d(F, 1), 1)
    if best is None:  # any vertex of the family has depth >= 1
        q = F[0].vertices[0]
        best = (q, depth_exact_2d(F, q).value)
    lo, hi = best[1], n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        found = _certify(F, r_center_polygon_2d(F, mid), mid)
        if found is None:
            hi = mid - 1
        else:
            best = found
            lo = found[1]
    q, value = best
    return int(value), np.asarray(q, dtype=float)


def center_region_2d(F, r, angular_steps=360):
    """Outer approximation of the r-center from uniformly sampled planks."""
    if F.dim != 2:
        raise ValueError("center regions are only computed in the plane")
    if angular_steps < 3:
        raise ValueError("angular_steps must be at least 3")
    n = len(F)
    if not 1 <= r <= n:
        raise ValueError(f"r={r} outside [1, {n}]")
    theta = np.pi * np.arange(angular_steps) / angular_steps
    U = np.column_stack([np.cos(theta), np.sin(theta)])
    a, b = plank_offsets(F, U, r)
    planks = [Plank(u, None) if lo > hi + F.tol else Plank(u, (min(lo, hi), max(lo, hi)))
              for u, lo, hi in zip(U, a, b)]
    empty2d = np.zeros((0, 2))
    if any(pl.empty for pl in planks):
        return CenterRegionApprox(r, empty2d, empty2d, True, planks)
    scale = max(1.0, float(np.abs(F.stacked()[0]).max()))
    poly = clip_halfplanes(_bbox(F), np.vstack([U, -U]), np.concatenate([a, -b]),
                           eps=F.tol * scale)
    if len(poly) == 0:
        return CenterRegionApprox(r, empty2d, empty2d, True, planks)
    certified = [q for q in [_polygon_centroid(poly), *poly]
                 if depth_exact_2d(F, q).value >= r]
    certified = np.array(certified).reshape(-1, 2)
    return CenterRegionApprox(r, poly, certified, False, planks)


def halfplanes_empty(halfspaces):
    """LP check that the closed halfspaces have no common point."""
    A = -np.array([h.normal for h in halfspaces])
    b = -np.array([h.offset for h in halfspaces])
    res = linprog(np.zeros(A.shape[1]), A_ub=A, b_ub=b,
                  bounds=[(None, None)] * A.shape[1], method="highs")
    if res.status == 2:
        return True
    if res.status == 0:
        return False
    raise LPError(f"halfplane LP failed: {res.message}")


def _farkas_support(U, c):
    """Indices of a minimal positive combination of ``U`` with positive ``c``.

    Solves ``max sum(l * c)`` over ``sum(l * U) = 0, sum(l) = 1, l >= 0``;
    a basic optimum has at most three nonzeros in the plane.
    """
    k = len(U)
    A_eq = np.vstack([U.T, np.ones(k)])
    b_eq = np.array([0.0, 0.0, 1.0])
    res = linprog(-c, A_eq=A_eq, b_eq=b_eq, bounds=(0, None), method="highs-ds")
    if res.status != 0:
        raise LPError(f"witness LP failed: {res.message}")
    if -res.fun <= 0:
        return None
    lam = res.x
    return [int(i) for i in np.argsort(-lam) if lam[i] > 1e-12]


def simplex_witness_2d(F, r, resolution=720):
    """A point of depth >= r, or three halfplanes certifying that none exists.

    The returned :class:`SimplexWitness` consists of inner plank halfplanes
    ``{<u, x> >= a(u) - 1e-6}``, each containing more than ``n - r`` sets,
    whose common intersection is empty.
    """
    if F.dim != 2:
        raise ValueError("simplex witnesses are only searched in the plane")
    n = len(F)
    if not 1 <= r <= n:
        raise ValueError(f"r={r} outside [1, {n}]")
    depth, point = max_depth_2d(F)
    if depth >= r:
        return point
    theta = 2 * np.pi * np.arange(resolution) / resolution
    U = np.vstack([critical_directions_2d(F),
                   np.column_stack([np.cos(theta), np.sin(theta)])])
    a, _ = plank_offsets(F, U, r)
    c = a - WITNESS_INFLATION
    support = _farkas_support(U, c)
    if support is None:
        raise WitnessNotFound(f"witness not found at resolution {resolution} for r={r}")
    if len(support) == 2:
        extra = np.array([[-U[support[0], 1], U[support[0], 0]]])
        U = np.vstack([U, extra])
        c = np.append(c, plank_offsets(F, extra, r)[0] - WITNESS_INFLATION)
        support.append(len(U) - 1)
    for triple in itertools.combinations(support, 3):
        hs = [Halfspace(U[i], c[i]) for i in triple]
        if halfplanes_empty(hs):
            counts = [sum(halfspace_contains(h, P, F.tol) for P in F) for h in hs]
            if min(counts) <= n - r:
                raise WitnessNotFound("witness halfplane contains too few sets")
            return SimplexWitness(hs, counts)
    raise WitnessNotFound(f"witness not found at resolution {resolution} for r={r}")


def _hull_union(A, B):
    if A.exact is not None and B.exact is not None:
        return Polytope(list(A.exact) + list(B.exact))
    return Polytope(np.vstack([A.vertices, B.vertices]))


def holmsen_depth_check(F):
    """Check the triple hull condition, then look for a point of depth >= n/2.

    Returns ``(ok, point)`` where ``ok`` says whether the deepest point has
    depth at least half the family.
    """
    if F.dim != 2:
        raise ValueError("holmsen_depth_check needs a planar family")
    for i, j, k in itertools.combinations(range(len(F)), 3):
        A, B, C = F[i], F[j], F[k]
        if not polytopes_intersect([_hull_union(A, B), _hull_union(B, C),
                                    _hull_union(C, A)]):
            raise TripleConditionError((i, j, k))
    depth, point = max_depth_2d(F)
    return 2 * depth >= len(F), point
