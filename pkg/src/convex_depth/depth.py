"""Depth of a point with respect to a family of polytopes.

The depth of ``p`` is the least number of family members met by a closed
halfspace containing ``p``.  Only halfspaces whose boundary passes through
``p`` need to be examined, so every query here is a minimum over directions
``u`` of the hit count of ``{x : <u, x> >= <u, p>}``.

In the plane the hit count only changes when ``u`` becomes orthogonal to
``v - p`` for some vertex ``v``; :func:`depth_exact_2d` evaluates one
direction inside every arc between such events plus the events themselves.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import norm, qmc

from .geometry import Halfspace, _check_dim, halfspace_intersects

__all__ = [
    "DepthCertificate", "SupportProfile", "support_profile",
    "halfspace_hit_count", "depth_upper_at", "depth_exact_2d",
    "depth_sampled_upper", "min_transversal_count_2d", "sweep_directions_2d",
    "sphere_directions",
]

EXACT_2D = "exact-2d"
SAMPLED_UPPER = "sampled-upper"


@dataclass(frozen=True)
class DepthCertificate:
    """Depth value with the direction of a halfspace realizing it.

    The halfspace ``{x : <witness_direction, x> >= <witness_direction, p>}``
    meets exactly ``value`` sets.  For ``method == "exact-2d"`` no halfspace
    does better; for ``"sampled-upper"`` the value only bounds the depth
    from above.
    """
    value: int
    witness_direction: np.ndarray
    method: str


@dataclass(frozen=True)
class SupportProfile:
    """Per-set extent ``[mins[i], maxs[i]]`` of the family projected on ``u``."""
    direction: np.ndarray
    mins: np.ndarray
    maxs: np.ndarray


def _unit(u):
    u = np.asarray(u, dtype=float)
    length = np.linalg.norm(u)
    if length == 0:
        raise ValueError("direction must be nonzero")
    return u / length


def _projections(F, U, origin=None):
    """Per-set (mins, maxs) of shape ``(n, D)`` for directions ``U`` (D, d)."""
    verts, starts = F.stacked()
    if origin is not None:
        verts = verts - origin
    proj = verts @ np.atleast_2d(U).T
    return (np.minimum.reduceat(proj, starts, axis=0),
            np.maximum.reduceat(proj, starts, axis=0))


def support_profile(F, u):
    u = _unit(u)
    _check_dim(F.dim, u.shape[0])
    mins, maxs = _projections(F, u[None, :])
    return SupportProfile(u, mins[:, 0], maxs[:, 0])


def halfspace_hit_count(F, H):
    """Number of members of ``F`` met by the closed halfspace ``H``."""
    _check_dim(F.dim, H.dim)
    return sum(halfspace_intersects(H, P, F.tol) for P in F)


def depth_upper_at(F, p, u):
    """Hit count of the halfspace through ``p`` with inner normal ``u``.

    Any such count bounds the depth of ``p`` from above.
    """
    u = _unit(u)
    p = np.asarray(p, dtype=float)
    _check_dim(F.dim, u.shape[0])
    _check_dim(F.dim, p.shape[0])
    return halfspace_hit_count(F, Halfspace(u, float(u @ p)))


def sweep_directions_2d(offsets):
    """Event directions and one direction per open arc between them.

    ``offsets`` holds vectors ``v - p``; events are the unit normals
    orthogonal to them.  Returns an array of unit vectors, events first.
    """
    offsets = np.atleast_2d(np.asarray(offsets, dtype=float))
    lengths = np.linalg.norm(offsets, axis=1)
    scale = max(1.0, float(lengths.max(initial=0.0)))
    offsets = offsets[lengths > 1e-14 * scale]
    if len(offsets) == 0:
        return np.array([[1.0, 0.0]])
    base = np.arctan2(offsets[:, 1], offsets[:, 0])
    ang = np.mod(np.concatenate([base + np.pi / 2, base - np.pi / 2]), 2 * np.pi)
    ang = np.unique(ang)
    gaps = np.diff(np.append(ang, ang[0] + 2 * np.pi))
    mids = ang + gaps / 2
    allang = np.concatenate([ang, mids[gaps > 0]])
    return np.column_stack([np.cos(allang), np.sin(allang)])


def _sweep_counts(F, p, mode):
    p = np.asarray(p, dtype=float)
    if F.dim != 2:
        raise ValueError("exact sweep is only available in the plane")
    _check_dim(2, p.shape[0])
    verts, _ = F.stacked()
    U = sweep_directions_2d(verts - p)
    mins, maxs = _projections(F, U, origin=p)
    tol = F.tol
    if mode == "halfspace":
        hit = maxs >= -tol
    else:
        hit = (maxs >= -tol) & (mins <= tol)
    return U, hit.sum(axis=0)


def depth_exact_2d(F, p):
    """Exact depth in the plane by a rotational sweep around ``p``."""
    U, counts = _sweep_counts(F, p, "halfspace")
    best = int(np.argmin(counts))
    return DepthCertificate(int(counts[best]), U[best], EXACT_2D)


def min_transversal_count_2d(F, p):
    """Least number of members met by a line through ``p``."""
    _, counts = _sweep_counts(F, p, "line")
    return int(counts.min())


def sphere_directions(dim, count, seed=42):
    """``count`` quasi-uniform unit vectors in ``R^dim``, fixed by ``seed``."""
    rng = np.random.default_rng(seed)
    if dim == 1:
        signs = np.where(np.arange(count) % 2 == 0, 1.0, -1.0)
        return (signs if rng.random() < 0.5 else -signs)[:, None]
    if dim == 2:
        theta = 2 * np.pi * (np.arange(count) + rng.random()) / count
        return np.column_stack([np.cos(theta), np.sin(theta)])
    sampler = qmc.Sobol(dim, scramble=True, seed=rng)
    pts = sampler.random_base2(max(0, math.ceil(math.log2(count))))[:count]
    g = norm.ppf(np.clip(pts, 1e-12, 1 - 1e-12))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


def depth_sampled_upper(F, p, directions, seed=42, chunk=4096):
    """Minimum hit count over ``directions`` sampled directions.

    Works in any dimension.  The result bounds the depth from above.
    """
    if directions < 1:
        raise ValueError("need at least one direction")
    p = np.asarray(p, dtype=float)
    _check_dim(F.dim, p.shape[0])
    U = sphere_directions(F.dim, directions, seed)
    best_val, best_u = None, None
    for lo in range(0, len(U), chunk):
        block = U[lo:lo + chunk]
        _, maxs = _projections(F, block, origin=p)
        counts = (maxs >= -F.tol).sum(axis=0)
        i = int(np.argmin(counts))
        if best_val is None or counts[i] < best_val:
            best_val, best_u = int(counts[i]), block[i]
    return DepthCertificate(best_val, best_u, SAMPLED_UPPER)
