"""Polytopes in V-representation, support queries and intersection tests.

Every convex set is a bounded polytope given by a vertex list.  Coordinates
that arrive as ints, :class:`~fractions.Fraction` or ``"p/q"`` strings are
kept exactly next to the float array, and LP feasibility questions about such
polytopes are then answered in rational arithmetic.
"""

import itertools
import numbers
import os
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from . import _exact_lp

__all__ = [
    "DEFAULT_TOL", "LPError", "Polytope", "Halfspace", "Family",
    "support", "halfspace_intersects", "halfspace_contains",
    "polytopes_intersect", "intersection_point", "is_k_intersecting",
    "default_tolerance",
]

DEFAULT_TOL = 1e-9


class LPError(RuntimeError):
    """The LP solver failed; distinct from a clean "infeasible" answer."""


def default_tolerance():
    """Geometric tolerance, overridable with ``CONVEX_DEPTH_TOLERANCE``."""
    env = os.environ.get("CONVEX_DEPTH_TOLERANCE")
    if env:
        return float(env)
    return DEFAULT_TOL


def _parse_coord(c):
    """Return ``(float_value, exact_value_or_None)`` for one coordinate."""
    if isinstance(c, str):
        q = Fraction(c.strip())
        return float(q), q
    if isinstance(c, bool):
        raise TypeError("boolean is not a coordinate")
    if isinstance(c, (numbers.Integral, Fraction)):
        return float(c), Fraction(c)
    x = float(c)
    if not np.isfinite(x):
        raise ValueError("coordinates must be finite")
    return x, None


class Polytope:
    """Convex hull of a nonempty, finite vertex list.

    ``vertices`` is a float array of shape ``(k, d)``.  ``exact`` holds the
    same vertices as tuples of Fractions when all inputs were rational, else
    ``None``.
    """

    def __init__(self, vertices):
        if isinstance(vertices, np.ndarray) and vertices.dtype.kind == "f":
            arr = np.atleast_2d(np.asarray(vertices, dtype=float))
            exact = None
        else:
            rows = [list(v) if np.ndim(v) else [v] for v in vertices]
            parsed = [[_parse_coord(c) for c in row] for row in rows]
            arr = np.array([[f for f, _ in row] for row in parsed], dtype=float)
            if any(q is None for row in parsed for _, q in row):
                exact = None
            else:
                exact = tuple(tuple(q for _, q in row) for row in parsed)
        if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
            raise ValueError("a polytope needs at least one vertex of dimension >= 1")
        if len({len(r) for r in arr}) != 1:
            raise ValueError("vertices must share one dimension")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coordinates must be finite")
        self.vertices = arr
        self.exact = exact

    @property
    def dim(self):
        return self.vertices.shape[1]

    def __len__(self):
        return self.vertices.shape[0]

    def __repr__(self):
        return f"Polytope({self.vertices.tolist()!r})"

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        if self.exact is not None and other.exact is not None:
            return self.exact == other.exact
        return self.vertices.shape == other.vertices.shape and np.array_equal(
            self.vertices, other.vertices)

    __hash__ = None

    def to_json(self):
        if self.exact is not None:
            return {"vertices": [[_exact_to_json(q) for q in row] for row in self.exact]}
        return {"vertices": self.vertices.tolist()}


def _exact_to_json(q):
    if q.denominator == 1:
        return int(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Halfspace:
    """Closed halfspace ``{x : <normal, x> >= offset}`` with unit normal."""

    def __init__(self, normal, offset):
        normal = np.asarray(normal, dtype=float)
        if normal.ndim != 1 or abs(np.linalg.norm(normal) - 1.0) > 1e-9:
            raise ValueError("halfspace normal must be a unit vector")
        self.normal = normal
        self.offset = float(offset)

    @classmethod
    def from_normal(cls, normal, offset):
        """Build from an arbitrary nonzero normal, rescaling both parts."""
        normal = np.asarray(normal, dtype=float)
        length = np.linalg.norm(normal)
        if length == 0:
            raise ValueError("zero normal")
        return cls(normal / length, offset / length)

    @property
    def dim(self):
        return self.normal.shape[0]

    def __repr__(self):
        return f"Halfspace(normal={self.normal.tolist()}, offset={self.offset!r})"


class Family:
    """Ordered list of polytopes sharing one ambient dimension."""

    def __init__(self, sets, tol=None):
        sets = [s if isinstance(s, Polytope) else Polytope(s) for s in sets]
        if not sets:
            raise ValueError("a family needs at least one set")
        dims = {s.dim for s in sets}
        if len(dims) != 1:
            raise ValueError(f"mixed dimensions in family: {sorted(dims)}")
        self.sets = sets
        self.dim = dims.pop()
        self.tol = default_tolerance() if tol is None else float(tol)
        self._stack = None

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __getitem__(self, i):
        return self.sets[i]

    def __repr__(self):
        return f"Family(dim={self.dim}, n={len(self)})"

    def __eq__(self, other):
        if not isinstance(other, Family):
            return NotImplemented
        return self.dim == other.dim and self.sets == other.sets

    __hash__ = None

    @property
    def exact(self):
        return all(s.exact is not None for s in self.sets)

    def stacked(self):
        """All vertices as one array plus ``reduceat`` offsets per set."""
        if self._stack is None:
            verts = np.vstack([s.vertices for s in self.sets])
            starts = np.cumsum([0] + [len(s) for s in self.sets[:-1]])
            self._stack = (verts, starts)
        return self._stack

    def to_json(self):
        return {"dim": self.dim, "sets": [s.to_json() for s in self.sets]}

    @classmethod
    def from_json(cls, data, tol=None):
        if not isinstance(data, dict) or "sets" not in data:
            raise ValueError("family JSON needs a 'sets' list")
        fam = cls([Polytope(s["vertices"]) for s in data["sets"]], tol=tol)
        if "dim" in data and int(data["dim"]) != fam.dim:
            raise ValueError(f"declared dim {data['dim']} but vertices have dim {fam.dim}")
        return fam


def _check_dim(a, b):
    if a != b:
        raise ValueError(f"dimension mismatch: {a} vs {b}")


def support(P, u):
    """Support function ``max_v <u, v>`` over the vertex list of ``P``."""
    u = np.asarray(u, dtype=float)
    _check_dim(P.dim, u.shape[-1])
    return float(np.max(P.vertices @ u))


def halfspace_intersects(H, P, tol=DEFAULT_TOL):
    """Closed test: does ``H`` meet ``P`` (tangency counts)?"""
    _check_dim(H.dim, P.dim)
    return support(P, H.normal) >= H.offset - tol


def halfspace_contains(H, P, tol=DEFAULT_TOL):
    """Is all of ``P`` inside ``H``?"""
    _check_dim(H.dim, P.dim)
    return float(np.min(P.vertices @ H.normal)) >= H.offset - tol


def _float_intersection(ps):
    # variables: convex weights of every polytope; y = weights of the first one
    d = ps[0].dim
    sizes = [len(p) for p in ps]
    nvar = sum(sizes)
    starts = np.cumsum([0] + sizes[:-1])
    rows, rhs = [], []
    first = ps[0].vertices
    for i, p in enumerate(ps):
        row = np.zeros(nvar)
        row[starts[i]:starts[i] + sizes[i]] = 1.0
        rows.append(row)
        rhs.append(1.0)
        if i == 0:
            continue
        block = np.zeros((d, nvar))
        block[:, starts[i]:starts[i] + sizes[i]] = p.vertices.T
        block[:, :sizes[0]] -= first.T
        rows.extend(block)
        rhs.extend([0.0] * d)
    res = linprog(np.zeros(nvar), A_eq=np.array(rows), b_eq=np.array(rhs),
                  bounds=(0, None), method="highs")
    if res.status == 2:
        return None
    if res.status != 0:
        raise LPError(f"intersection LP failed: {res.message}")
    return np.asarray(res.x[:sizes[0]]) @ first


def _exact_intersection(ps):
    d = ps[0].dim
    sizes = [len(p) for p in ps]
    nvar = sum(sizes)
    starts = list(itertools.accumulate([0] + sizes[:-1]))
    first = ps[0].exact
    A, b = [], []
    for i, p in enumerate(ps):
        row = [0] * nvar
        for j in range(sizes[i]):
            row[starts[i] + j] = 1
        A.append(row)
        b.append(1)
        if i == 0:
            continue
        for t in range(d):
            row = [Fraction(0)] * nvar
            for j, v in enumerate(p.exact):
                row[starts[i] + j] += v[t]
            for j, v in enumerate(first):
                row[j] -= v[t]
            A.append(row)
            b.append(0)
    x = _exact_lp.feasible_point(A, b)
    if x is None:
        return None
    return tuple(sum((x[j] * first[j][t] for j in range(sizes[0])), Fraction(0))
                 for t in range(d))


def intersection_point(ps, exact=None):
    """A common point of ``conv(ps[i])`` for all ``i``, or ``None`` if empty.

    Rational polytopes are handled by an exact simplex (returning a tuple of
    Fractions) unless ``exact=False``; otherwise HiGHS decides feasibility.
    """
    ps = list(ps)
    if not ps:
        raise ValueError("need at least one polytope")
    for p in ps[1:]:
        _check_dim(ps[0].dim, p.dim)
    if exact is None:
        exact = all(p.exact is not None for p in ps)
    if exact:
        return _exact_intersection(ps)
    return _float_intersection(ps)


def polytopes_intersect(ps, exact=None):
    """True iff the convex hulls in ``ps`` share a point."""
    return intersection_point(ps, exact=exact) is not None


def is_k_intersecting(F, k):
    """True iff every ``k`` members of ``F`` have a common point."""
    if not 1 <= k <= len(F):
        raise ValueError(f"k={k} outside [1, {len(F)}]")
    return all(polytopes_intersect([F[i] for i in idx])
               for idx in itertools.combinations(range(len(F)), k))
