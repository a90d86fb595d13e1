"""Random instance generators and independent oracles shared by the tests."""

import itertools

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from convex_depth import Family, is_k_intersecting

SQ = [(0, 0), (1, 0), (1, 1), (0, 1)]


def random_family(rng, n, dim=2, max_vertices=5, spread=1.0):
    sets = []
    for _ in range(n):
        c = rng.uniform(-spread, spread, dim)
        k = int(rng.integers(1, max_vertices + 1))
        sets.append(c + rng.normal(size=(k, dim)) * rng.uniform(0.2, 1.5))
    return Family(sets)


def random_pairwise_family(rng, n):
    """Rejection-sampled 2-intersecting planar family of segments and polygons."""
    while True:
        sets = []
        for _ in range(n):
            c = rng.normal(scale=0.4, size=2)
            if rng.random() < 0.5:
                th = rng.uniform(0, np.pi)
                d = np.array([np.cos(th), np.sin(th)]) * rng.uniform(1.5, 3.0)
                sets.append(np.array([c - d, c + d]))
            else:
                k = int(rng.integers(3, 6))
                sets.append(c + rng.normal(size=(k, 2)) * rng.uniform(0.5, 1.5))
        F = Family(sets)
        if n == 1 or is_k_intersecting(F, 2):
            return F


def symmetric_family(rng, pairs, max_vertices=4):
    sets = []
    for _ in range(pairs):
        c = rng.uniform(-2, 2, 2)
        k = int(rng.integers(1, max_vertices + 1))
        v = c + rng.normal(size=(k, 2)) * rng.uniform(0.2, 1.0)
        sets += [v, -v]
    return Family(sets)


def dense_depth(F, p, count=100000):
    """Upper bound by brute force over ``count`` equally spaced directions."""
    th = 2 * np.pi * (np.arange(count) + 0.5) / count
    U = np.column_stack([np.cos(th), np.sin(th)])
    hits = np.zeros(count, dtype=int)
    for P in F:
        hits += ((P.vertices - p) @ U.T).max(axis=0) >= -F.tol
    return int(hits.min())


def facets(P):
    """Facet inequalities ``A x <= b`` (unit normals) of a planar polytope."""
    v = np.unique(P.vertices, axis=0)
    if len(v) >= 3:
        try:
            hull = ConvexHull(v)
            eq = hull.equations
            return eq[:, :2], -eq[:, 2]
        except QhullError:
            pass
    # point or segment: its own line plus end caps
    if len(v) == 1:
        return np.array([[1, 0], [-1, 0], [0, 1], [0, -1.0]]), np.array(
            [v[0, 0], -v[0, 0], v[0, 1], -v[0, 1]])
    a, b = v[0], v[-1]
    d = (b - a) / np.linalg.norm(b - a)
    nrm = np.array([-d[1], d[0]])
    return (np.array([nrm, -nrm, d, -d]),
            np.array([nrm @ a, -nrm @ a, d @ b, -d @ a]))


def grid_common_point(ps, step=1e-2, slack=0.0):
    """Is there a grid point satisfying every facet inequality up to ``slack``?"""
    allv = np.vstack([P.vertices for P in ps])
    lo, hi = allv.min(axis=0) - step, allv.max(axis=0) + step
    xs = np.arange(lo[0], hi[0] + step, step)
    ys = np.arange(lo[1], hi[1] + step, step)
    G = np.array(np.meshgrid(xs, ys)).reshape(2, -1).T
    ok = np.ones(len(G), dtype=bool)
    for P in ps:
        A, b = facets(P)
        ok &= ((G @ A.T) <= b + slack).all(axis=1)
    return bool(ok.any())


def brute_min_hitting(N, subsets):
    for size in range(N + 1):
        for Y in itertools.combinations(range(N), size):
            if all(set(Y) & set(a) for a in subsets):
                return size
    raise AssertionError
