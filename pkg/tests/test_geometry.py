from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from convex_depth import (Family, Halfspace, LPError, Polytope, halfspace_contains,
                          halfspace_intersects, intersection_point, is_k_intersecting,
                          polytopes_intersect, support, triangle_edge_family)
from convex_depth import geometry
from helpers import SQ, grid_common_point

BOTTOM = Polytope([(1, 0), (2, 0)])


def test_support_examples():
    assert support(Polytope(SQ), [1, 0]) == 1
    assert support(Polytope(SQ), [0, 0]) == 0
    tri = Polytope([(0, 0), (3, 0), (1.5, 2.598)])
    assert support(tri, [0, 1]) == pytest.approx(2.598, abs=0)


def test_support_dimension_mismatch():
    with pytest.raises(ValueError):
        support(Polytope(SQ), [1, 0, 0])
    with pytest.raises(ValueError):
        halfspace_intersects(Halfspace([1, 0, 0], 0), Polytope(SQ))


def test_halfspace_intersects_examples():
    assert halfspace_intersects(Halfspace([1, 0], 1), Polytope(SQ))
    assert not halfspace_intersects(Halfspace([1, 0], 1.5), Polytope(SQ))
    assert not halfspace_intersects(Halfspace([0, 1], 0.8), BOTTOM)


def test_halfspace_contains_examples():
    assert halfspace_contains(Halfspace([1, 0], 0), Polytope(SQ))
    assert not halfspace_contains(Halfspace([1, 0], 0.5), Polytope(SQ))
    assert halfspace_intersects(Halfspace([1, 0], 0.5), Polytope(SQ))
    assert halfspace_contains(Halfspace([0, -1], -0.1), BOTTOM)


def test_halfspace_requires_unit_normal():
    with pytest.raises(ValueError):
        Halfspace([2, 0], 1)
    h = Halfspace.from_normal([2, 0], 1)
    assert h.offset == 0.5 and np.allclose(h.normal, [1, 0])


def test_polytopes_intersect_examples():
    left = Polytope(SQ)
    right = Polytope([(1, 0), (2, 0), (2, 1), (1, 1)])
    assert polytopes_intersect([left, right])
    assert not polytopes_intersect([Polytope([(0, 0), (1, 0)]), Polytope([(0, 1), (1, 1)])])
    T = triangle_edge_family()
    assert not polytopes_intersect(T.sets)
    # by hand: the three edges share no point, every two share a vertex
    for i, j in [(0, 1), (1, 2), (0, 2)]:
        assert polytopes_intersect([T[i], T[j]])
    assert not polytopes_intersect(T.sets, exact=False)


def test_exact_path_is_used_for_rationals():
    T = triangle_edge_family()
    assert T.exact
    q = intersection_point([T[0], T[1]])
    assert q == (Fraction(1), Fraction(0))
    P = Polytope([("1/3", "2/3"), (1, 0)])
    assert P.exact[0] == (Fraction(1, 3), Fraction(2, 3))
    assert Polytope([(0.5, 0)]).exact is None


def test_exact_tangency_at_a_single_point():
    # triangles touching only at (1, 1): exact arithmetic must see the contact
    a = Polytope([(0, 0), (1, 1), (0, 2)])
    b = Polytope([(1, 1), (2, 0), (2, 2)])
    c = Polytope([("1/2", "1/2"), (3, 3)])
    assert polytopes_intersect([a, b, c])
    assert not polytopes_intersect([a, b, Polytope([(0, "1/1000"), (3, "30001/10000")])])


def test_is_k_intersecting_examples():
    T = triangle_edge_family()
    assert is_k_intersecting(T, 2)
    assert not is_k_intersecting(T, 3)
    assert is_k_intersecting(Family([SQ]), 1)
    with pytest.raises(ValueError):
        is_k_intersecting(T, 4)


def test_lp_failure_is_not_infeasible(monkeypatch):
    class Res:
        status = 4
        message = "numerical trouble"

    monkeypatch.setattr(geometry, "linprog", lambda *a, **k: Res())
    with pytest.raises(LPError):
        polytopes_intersect([Polytope([(0.5, 0.0)]), Polytope([(0.5, 0.0)])])


def test_family_json_roundtrip():
    F = Family.from_json({"dim": 2, "sets": [{"vertices": [["1/2", 0], [1, "3/4"]]},
                                              {"vertices": [[0, 0]]}]})
    assert F.exact
    assert Family.from_json(F.to_json()) == F
    G = Family([[(0.1, 0.2), (0.3, 0.4)]])
    assert Family.from_json(G.to_json()) == G
    with pytest.raises(ValueError):
        Family.from_json({"dim": 3, "sets": [{"vertices": [[0, 0]]}]})
    with pytest.raises(ValueError):
        Family([[(0, 0)], [(0, 0, 0)]])


def test_tolerance_env_override(monkeypatch):
    monkeypatch.setenv("CONVEX_DEPTH_TOLERANCE", "1e-6")
    assert Family([SQ]).tol == 1e-6
    assert Family([SQ], tol=0.5).tol == 0.5


coords = st.floats(-5, 5, allow_nan=False, allow_infinity=False)
polys = st.lists(st.tuples(coords, coords), min_size=1, max_size=6)
vecs = st.tuples(coords, coords)


@given(polys, vecs, st.floats(0.01, 10))
def test_support_positively_homogeneous(vs, u, lam):
    P = Polytope(np.array(vs, dtype=float))
    assert support(P, np.multiply(u, lam)) == pytest.approx(lam * support(P, u), abs=1e-9)


@given(polys, vecs, vecs)
def test_support_subadditive(vs, u, w):
    P = Polytope(np.array(vs, dtype=float))
    assert support(P, np.add(u, w)) <= support(P, u) + support(P, w) + 1e-9


@given(polys, st.floats(0, 2 * np.pi), st.floats(-5, 5))
def test_contains_implies_intersects(vs, th, c):
    P = Polytope(np.array(vs, dtype=float))
    H = Halfspace([np.cos(th), np.sin(th)], c)
    if halfspace_contains(H, P):
        assert halfspace_intersects(H, P)


def test_intersection_agrees_with_grid_oracle():
    rng = np.random.default_rng(7)
    step = 1e-2
    checked = 0
    for _ in range(60):
        n = int(rng.integers(2, 5))
        ps = [Polytope(rng.uniform(-1, 1, 2) + rng.normal(size=(int(rng.integers(1, 7)), 2)) * 0.8)
              for _ in range(n)]
        lp = polytopes_intersect(ps)
        if grid_common_point(ps, step):
            assert lp
        if lp:
            assert grid_common_point(ps, step, slack=step)
        checked += 1
    assert checked == 60


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_k_intersecting_monotone_in_k(seed):
    rng = np.random.default_rng(seed)
    F = Family([rng.normal(size=(3, 2)) * 1.5 for _ in range(4)])
    flags = [is_k_intersecting(F, k) for k in range(1, 5)]
    for k in range(1, 4):
        if flags[k]:
            assert flags[k - 1]
