import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from convex_depth import (BlemishParams, HittingInstance, beta_exhaustive_small,
                          beta_threshold_violations, blemish_feasible, blemish_optimize,
                          bounds_table, complement_instance, instance_beta_ratio,
                          min_hitting_set)
from convex_depth.hitting import (SearchTooLarge, blemish_margin, blemish_threshold,
                                  bounds_table_csv)
from helpers import brute_min_hitting

SINGLES = HittingInstance(3, [[0], [1], [2]])


def test_min_hitting_set_examples():
    assert min_hitting_set(SINGLES).min_size == 3
    assert min_hitting_set(HittingInstance(1, [[0], [0]])).min_size == 1
    res = min_hitting_set(complement_instance(6, 2))
    assert res.min_size == 3
    assert all(res.witness & A for A in complement_instance(6, 2).subsets)


def test_instance_validation_and_json():
    with pytest.raises(ValueError):
        HittingInstance(3, [[]])
    with pytest.raises(ValueError):
        HittingInstance(3, [[3]])
    inst = HittingInstance.from_json({"N": 4, "subsets": [[1, 2], [4]]})
    assert inst.subsets == (frozenset({0, 1}), frozenset({3}))
    assert HittingInstance.from_json(inst.to_json()) == inst


def test_branch_and_bound_matches_exhaustive():
    rng = np.random.default_rng(0)
    for _ in range(500):
        N = int(rng.integers(1, 13))
        m = int(rng.integers(1, 9))
        subsets = []
        for _ in range(m):
            size = int(rng.integers(1, N + 1))
            subsets.append(rng.choice(N, size=size, replace=False).tolist())
        inst = HittingInstance(N, subsets)
        a = min_hitting_set(inst, method="bnb")
        b = min_hitting_set(inst, method="exhaustive")
        assert a.min_size == b.min_size
        assert all(a.witness & A for A in inst.subsets)
        assert len(a.witness) == a.min_size
        if N <= 8:
            assert a.min_size == brute_min_hitting(N, subsets)


def test_instance_beta_ratio_examples():
    assert instance_beta_ratio(SINGLES, 2) == (False, Fraction(1, 3))
    assert instance_beta_ratio(complement_instance(6, 2), 2) == (False, Fraction(2, 3))
    assert instance_beta_ratio(HittingInstance(5, [range(5)]), 1) == (True, 1)


def test_beta_exhaustive_examples():
    assert beta_exhaustive_small(3, 2, 6) == Fraction(1, 3)
    assert beta_exhaustive_small(2, 1, 4) == Fraction(1, 2)
    assert beta_exhaustive_small(1, 1, 3) == 0
    with pytest.raises(SearchTooLarge):
        beta_exhaustive_small(4, 2, 8)


@pytest.mark.parametrize("k,maxN", [(1, 6), (2, 6), (3, 5)])
def test_above_threshold_always_hit(k, maxN):
    assert beta_threshold_violations(k + 1, k, maxN, Fraction(1, k + 1)) == 0


def test_threshold_below_beta_has_violations():
    assert beta_threshold_violations(3, 2, 6, Fraction(1, 4)) > 0


def test_above_threshold_by_enumeration_oracle():
    # independent check for k = 1, m = 2 over itertools
    for N in range(1, 6):
        subs = [frozenset(c) for s in range(1, N + 1) for c in itertools.combinations(range(N), s)]
        for A, B in itertools.product(subs, repeat=2):
            if 2 * min(len(A), len(B)) > N:
                assert A & B


def test_complement_instance():
    inst = complement_instance(3, 1)
    assert sorted(map(sorted, inst.subsets)) == [[0, 1], [0, 2], [1, 2]]
    inst = complement_instance(6, 2)
    assert inst.m == 15 and all(len(A) == 4 for A in inst.subsets)
    inst = complement_instance(4, 3)
    assert sorted(map(sorted, inst.subsets)) == [[0], [1], [2], [3]]
    for n in range(2, 9):
        for k in range(1, n):
            assert min_hitting_set(complement_instance(n, k)).min_size == k + 1
    with pytest.raises(ValueError):
        complement_instance(3, 3)


def test_blemish_feasible_examples():
    k = 10
    assert blemish_feasible(BlemishParams(20, k, math.ceil(0.37 * k), 1 - 15 ** (-1 / k)))
    assert not blemish_feasible(BlemishParams(20, k, 0, 0.0))
    boundary = BlemishParams(20, 10, 9, 0.5)
    assert not blemish_feasible(boundary)
    assert blemish_margin(boundary) == 0
    with pytest.raises(ValueError):
        BlemishParams(3, 4, 0, 0.5)
    with pytest.raises(ValueError):
        BlemishParams(3, 2, 0, 1.0)


def test_blemish_feasible_monotone_in_beta():
    for m, k in [(6, 3), (10, 5), (12, 4), (20, 10)]:
        for ell in range(k):
            if ell + 1 > m:
                continue
            flags = [blemish_feasible(BlemishParams(m, k, ell, b))
                     for b in np.linspace(0, 0.999, 400)]
            changes = sum(a != b for a, b in zip(flags, flags[1:]))
            assert changes <= 1 and flags[-1]
            if changes:
                assert not flags[0]


def test_blemish_threshold_is_the_boundary():
    for m, k, ell in [(8, 4, 1), (20, 10, 4), (6, 3, 2)]:
        t = blemish_threshold(m, k, ell)
        assert not blemish_feasible(BlemishParams(m, k, ell, max(0.0, t - 1e-6)))
        assert blemish_feasible(BlemishParams(m, k, ell, t + 1e-6))


def test_blemish_optimize_examples():
    for k in range(3, 31):
        assert blemish_optimize(2 * k, k)[1] <= 1 - 15 ** (-1 / k) + 1e-12
    for k in range(1, 8):
        assert blemish_optimize(k, k) == (k - 1, 0.0)
    ell, beta = blemish_optimize(4, 2)
    assert (ell, beta) == (0, pytest.approx(0.5))


def test_blemish_optimize_monotone_in_k():
    for m in range(1, 25):
        vals = [blemish_optimize(m, k)[1] for k in range(1, m + 1)]
        assert all(a >= b - 1e-15 for a, b in zip(vals, vals[1:]))


def test_bounds_table():
    rows = {(r["d"], r["k"]): r for r in bounds_table(4)}
    assert rows[(2, 1)]["alpha_exact"] == Fraction(1, 3)
    assert rows[(2, 2)]["alpha_exact"] == Fraction(2, 3)
    assert rows[(2, 3)]["alpha_exact"] == 1
    assert rows[(3, 3)]["alpha_exact"] == Fraction(3, 4)
    assert rows[(3, 2)]["alpha_blemish_lower"] == pytest.approx(0.5)
    for r in rows.values():
        if r["alpha_exact"] is not None:
            assert r["alpha_exact"] + r["beta_exact"] == 1
        assert r["alpha_blemish_lower"] + r["beta_blemish_upper"] == pytest.approx(1)
    for d in range(1, 5):
        asym = [rows[(d, k)]["alpha_centerpoint_asymptotic"] for k in range(1, d + 2)]
        assert asym == sorted(asym)
    csv = bounds_table_csv(bounds_table(2)).splitlines()
    assert csv[0].startswith("d,k,alpha_exact,beta_exact")
    assert len(csv) == 1 + 2 + 3
