"""Hitting sets and the threshold ratio for small hitting sets.

Subsets of the ground set ``{0, ..., N-1}`` are stored internally as Python
ints used as bitmasks; JSON uses 1-based element lists.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "HittingInstance", "HittingResult", "BlemishParams", "SearchTooLarge",
    "min_hitting_set", "has_hitting_set", "instance_beta_ratio",
    "beta_exhaustive_small", "beta_threshold_violations", "complement_instance",
    "blemish_margin", "blemish_feasible", "blemish_threshold", "blemish_optimize",
    "bounds_table", "bounds_table_csv",
]

ENUMERATION_LIMIT = 10 ** 8
BLEMISH_GUARD = 1e-12


class SearchTooLarge(ValueError):
    pass


def _mask(elems):
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def _elems(mask):
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


@dataclass(frozen=True)
class HittingInstance:
    """Ground set ``range(ground_size)`` and ``m`` nonempty subsets of it."""
    ground_size: int
    subsets: tuple

    def __post_init__(self):
        subs = tuple(frozenset(int(e) for e in a) for a in self.subsets)
        object.__setattr__(self, "subsets", subs)
        if not subs:
            raise ValueError("need at least one subset")
        for a in subs:
            if not a:
                raise ValueError("subsets must be nonempty")
            if min(a) < 0 or max(a) >= self.ground_size:
                raise ValueError(f"subset {sorted(a)} not inside range({self.ground_size})")

    @property
    def m(self):
        return len(self.subsets)

    @property
    def masks(self):
        return [_mask(a) for a in self.subsets]

    def min_ratio(self):
        return Fraction(min(len(a) for a in self.subsets), self.ground_size)

    def to_json(self):
        return {"N": self.ground_size,
                "subsets": [sorted(e + 1 for e in a) for a in self.subsets]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["N"]), [[int(e) - 1 for e in a] for a in data["subsets"]])


@dataclass(frozen=True)
class HittingResult:
    min_size: int
    witness: frozenset


@dataclass(frozen=True)
class BlemishParams:
    m: int
    k: int
    ell: int
    beta: float

    def __post_init__(self):
        if not 0 <= self.ell <= self.k <= self.m:
            raise ValueError("need 0 <= ell <= k <= m")
        if not 0 <= self.beta < 1:
            raise ValueError("beta must lie in [0, 1)")


def _hits(Y, masks):
    return all(Y & a for a in masks)


def _exhaustive(masks, N):
    for size in range(N + 1):
        for combo in itertools.combinations(range(N), size):
            Y = _mask(combo)
            if _hits(Y, masks):
                return size, Y
    raise AssertionError("the full ground set hits every nonempty subset")


def _packing_bound(masks):
    """Greedy count of pairwise disjoint sets; each needs its own element."""
    used, count = 0, 0
    for a in sorted(masks, key=int.bit_count):
        if not a & used:
            used |= a
            count += 1
    return count


def _branch_and_bound(masks):
    # initial incumbent: one element from every set, greedily shared
    best_Y = 0
    for a in masks:
        if not a & best_Y:
            best_Y |= a & -a
    best = [best_Y.bit_count(), best_Y]

    def search(Y, size, unhit):
        if not unhit:
            if size < best[0]:
                best[0], best[1] = size, Y
            return
        if size + _packing_bound(unhit) >= best[0]:
            return
        pivot = min(unhit, key=int.bit_count)
        for e in _elems(pivot):
            bit = 1 << e
            search(Y | bit, size + 1, [a for a in unhit if not a & bit])

    search(0, 0, list(masks))
    return best[0], best[1]


def min_hitting_set(inst, method="bnb"):
    """Exact minimum hitting set.

    ``method="bnb"`` branches on the elements of a smallest unhit set with a
    disjoint-packing lower bound; ``"exhaustive"`` tries all subsets by size
    (only for ``N <= 20``).
    """
    masks = inst.masks
    if method == "exhaustive":
        if inst.ground_size > 20:
            raise SearchTooLarge("exhaustive search limited to N <= 20")
        size, Y = _exhaustive(masks, inst.ground_size)
    elif method == "bnb":
        size, Y = _branch_and_bound(masks)
    else:
        raise ValueError(f"unknown method {method!r}")
    return HittingResult(size, frozenset(_elems(Y)))


def has_hitting_set(inst, k):
    return min_hitting_set(inst).min_size <= k


def instance_beta_ratio(inst, k):
    """``(has a hitting set of size <= k, min |A_i| / N)``.

    An instance returning ``(False, rho)`` shows the threshold is at least rho.
    """
    if not 1 <= k <= inst.m:
        raise ValueError(f"k={k} outside [1, {inst.m}]")
    return has_hitting_set(inst, k), inst.min_ratio()


def _hit_table(N, k):
    """Boolean table ``[Y, A]``: does small set ``Y`` (|Y| <= k) meet mask ``A``."""
    ys = [_mask(c) for s in range(min(k, N) + 1) for c in itertools.combinations(range(N), s)]
    A = np.arange(1 << N)
    return (np.array(ys)[:, None] & A[None, :]) != 0


def _enumerate(m, k, N):
    """For every m-tuple of nonempty subsets of [N]: (no k-hitting set, min size).

    Arrays are indexed by the tuple ``(A_1 - 1, ..., A_m - 1)``.
    """
    table = _hit_table(N, k)[:, 1:]
    sizes = np.array([int(a).bit_count() for a in range(1, 1 << N)])
    acc = table
    minsize = sizes
    for _ in range(m - 1):
        acc = acc[..., None] & table.reshape((table.shape[0],) + (1,) * (acc.ndim - 1) + (-1,))
        minsize = np.minimum(minsize[..., None], sizes)
    return ~acc.any(axis=0), minsize


def _guard(m, maxN):
    if (2 ** maxN) ** m > ENUMERATION_LIMIT:
        raise SearchTooLarge(f"(2^{maxN})^{m} tuples exceed {ENUMERATION_LIMIT}")


def beta_exhaustive_small(m, k, maxN):
    """Sup of ``min|A_i| / N`` over instances without a k-hitting set.

    All m-tuples of nonempty subsets of ``[N]`` for ``N <= maxN`` are
    enumerated.  Returns 0 when no such instance exists.
    """
    if not 1 <= k <= m:
        raise ValueError(f"k={k} outside [1, {m}]")
    _guard(m, maxN)
    best = Fraction(0)
    for N in range(1, maxN + 1):
        bad, minsize = _enumerate(m, k, N)
        if bad.any():
            best = max(best, Fraction(int(minsize[bad].max()), N))
    return best


def beta_threshold_violations(m, k, maxN, beta):
    """Count instances with every ``|A_i| > beta * N`` but no k-hitting set."""
    _guard(m, maxN)
    beta = Fraction(beta)
    total = 0
    for N in range(1, maxN + 1):
        bad, minsize = _enumerate(m, k, N)
        total += int((bad & (minsize > beta * N)).sum())
    return total


def complement_instance(n, k):
    """All ``(n - k)``-subsets of ``[n]``; no k elements hit them all."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    return HittingInstance(n, [c for c in itertools.combinations(range(n), n - k)])


def blemish_margin(p):
    """``m (1 - (1 - beta)^(k - ell)) - (m - ell - 1)``; positive means feasible."""
    return p.m * (1.0 - (1.0 - p.beta) ** (p.k - p.ell)) - (p.m - p.ell - 1)


def blemish_feasible(p):
    """Strict expectation inequality of the blemish argument.

    Use :func:`blemish_margin` to see how far from the ``1e-12`` guard band a
    borderline case is.
    """
    return blemish_margin(p) > 0


def blemish_threshold(m, k, ell):
    """Infimal beta for which the inequality holds with ``ell`` blemishes."""
    if ell >= k:
        raise ValueError("need ell < k")
    return max(0.0, 1.0 - ((ell + 1) / m) ** (1.0 / (k - ell)))


def blemish_optimize(m, k):
    """``(ell, beta)`` minimizing the blemish threshold over ``ell < k``."""
    if not 1 <= k <= m:
        raise ValueError(f"k={k} outside [1, {m}]")
    return min(((ell, blemish_threshold(m, k, ell)) for ell in range(k)),
               key=lambda t: (t[1], t[0]))


def bounds_table(dmax):
    """Known values and bounds for alpha (depth ratio) and beta per (d, k).

    One dict per row with exact Fractions where a value is known.
    """
    if dmax < 1:
        raise ValueError("dmax must be positive")
    rows = []
    for d in range(1, dmax + 1):
        for k in range(1, d + 2):
            if k == d + 1:
                alpha = Fraction(1)
            elif k == d:
                alpha = Fraction(d, d + 1)
            elif k == 1:
                alpha = Fraction(1, d + 1)
            else:
                alpha = None
            _, blem = blemish_optimize(d + 1, k)
            rows.append({
                "d": d,
                "k": k,
                "alpha_exact": alpha,
                "beta_exact": None if alpha is None else 1 - alpha,
                "alpha_centerpoint_asymptotic": (d + 1) ** (-1.0 / k),
                "centerpoint_correction": f"(1 - {k - 1}/n)",
                "alpha_blemish_lower": 1.0 - blem,
                "beta_blemish_upper": blem,
            })
    return rows


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def bounds_table_csv(rows):
    cols = list(rows[0])
    lines = [",".join(cols)]
    lines += [",".join(_cell(r[c]) for c in cols) for r in rows]
    return "\n".join(lines) + "\n"
