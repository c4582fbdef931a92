"""Rank correlations that stay meaningful under heavy ties.

Two measures are provided:

* Spearman's rho, computed as the Pearson correlation of mid-ranks.
* Adler's normalization of Kendall's S: the number of concordant minus
  discordant pairs divided by the largest magnitude S can reach in the
  same direction, given the tie-group sizes of both variables. A joint
  arrangement that agrees perfectly with both tie structures scores
  exactly 1, even when one variable is a coarse ordinal score.

The extreme values of S over all re-pairings of two fixed multisets are
attained by the comonotone pairing (both sorted ascending) and the
antitone pairing (one ascending, one descending). In either pairing the
sign of every pair that is untied in both variables is the same, so the
extremes reduce to counting such pairs, which only depends on how the
tie blocks of the two sorted vectors overlap.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.stats import rankdata

from .resampling import ConfidenceInterval, bootstrap_corr_ci
from .utils.validation import check_not_constant, check_paired, check_values

METHODS = ("spearman", "adler")


@dataclass(frozen=True)
class PairCounts:
    concordant: int
    discordant: int
    ties_x_only: int
    ties_y_only: int
    ties_both: int
    s_statistic: int = None

    def __post_init__(self):
        s = self.concordant - self.discordant
        if self.s_statistic is None:
            object.__setattr__(self, "s_statistic", s)
        elif self.s_statistic != s:
            raise ValueError("s_statistic must equal concordant - discordant")

    @property
    def total(self):
        return (
            self.concordant
            + self.discordant
            + self.ties_x_only
            + self.ties_y_only
            + self.ties_both
        )


@dataclass(frozen=True)
class CorrelationEstimate:
    method: str
    estimate: float
    ci: Optional[ConfidenceInterval] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if not -1.0 <= self.estimate <= 1.0:
            raise ValueError(f"correlation {self.estimate} outside [-1, 1]")


def average_ranks(values):
    """Ranks 1..n with tied values sharing the mean of their positions."""
    return rankdata(check_values(values, error=ValueError), method="average")


def _pearson(a, b):
    a = a - a.mean()
    b = b - b.mean()
    r = float(np.dot(a, b) / np.sqrt(np.dot(a, a) * np.dot(b, b)))
    return min(1.0, max(-1.0, r))


def _spearman_fast(x, y):
    return _pearson(rankdata(x), rankdata(y))


def spearman(x, y):
    """Spearman rank correlation with mid-ranks for ties.

    >>> round(spearman([1, 2, 3, 4], [3, 3, 4, 5]).estimate, 4)
    0.9487
    """
    x, y = check_paired(x, y)
    check_not_constant(x, y)
    return CorrelationEstimate("spearman", _spearman_fast(x, y))


def _sign_products(x, y):
    iu = np.triu_indices(x.size, k=1)
    sx = np.sign(x[:, None] - x[None, :])[iu]
    sy = np.sign(y[:, None] - y[None, :])[iu]
    return sx, sy


def kendall_counts(x, y):
    """Classify every unordered index pair of ``(x, y)``.

    Quadratic in ``len(x)``; intended for a few hundred observations.
    """
    x, y = check_paired(x, y)
    sx, sy = _sign_products(x, y)
    prod = sx * sy
    tx, ty = sx == 0, sy == 0
    return PairCounts(
        concordant=int(np.count_nonzero(prod > 0)),
        discordant=int(np.count_nonzero(prod < 0)),
        ties_x_only=int(np.count_nonzero(tx & ~ty)),
        ties_y_only=int(np.count_nonzero(ty & ~tx)),
        ties_both=int(np.count_nonzero(tx & ty)),
    )


def _s_statistic(x, y):
    sx, sy = _sign_products(x, y)
    return int(np.dot(sx, sy))


def _tie_sizes(v):
    return np.unique(v, return_counts=True)[1]


def _pairs(k):
    k = np.asarray(k, dtype=np.int64)
    return int(np.sum(k * (k - 1) // 2))


def _joint_tie_pairs(sizes_a, sizes_b):
    """Pairs tied in both when two sorted vectors with these tie blocks are aligned."""
    cuts = np.union1d(np.cumsum(sizes_a), np.cumsum(sizes_b))
    return _pairs(np.diff(np.concatenate(([0], cuts))))


def _s_extremes(sizes_x, sizes_y):
    n = int(np.sum(sizes_x))
    untied_x_or_y = n * (n - 1) // 2 - _pairs(sizes_x) - _pairs(sizes_y)
    s_max = untied_x_or_y + _joint_tie_pairs(sizes_x, sizes_y)
    s_min = -(untied_x_or_y + _joint_tie_pairs(sizes_x, sizes_y[::-1]))
    return s_min, s_max


def adler_bounds(x, y):
    """Smallest and largest Kendall S over all re-pairings of ``x`` with ``y``.

    Both bounds depend only on the tie-group sizes of the two vectors.
    """
    x, y = check_paired(x, y)
    return _s_extremes(_tie_sizes(x), _tie_sizes(y))


def _adler_fast(x, y):
    s = _s_statistic(x, y)
    if s == 0:
        return 0.0
    s_min, s_max = _s_extremes(_tie_sizes(x), _tie_sizes(y))
    return s / s_max if s > 0 else s / -s_min


class ResampledCorrelation:
    """Correlation of ``(x[idx], y[idx])`` for many index vectors ``idx``.

    Values are replaced by dense integer codes once, so mid-ranks and tie
    profiles of a resample come from a ``bincount``. For the Adler measure
    the pairwise sign products of the original sample are tabulated, and
    the S statistic of a resample is a sum over the indexed sub-matrix.
    """

    def __init__(self, x, y, method="spearman"):
        if method not in METHODS:
            raise ValueError(f"unknown correlation method {method!r}")
        self.method = method
        ux, self._cx = np.unique(x, return_inverse=True)
        uy, self._cy = np.unique(y, return_inverse=True)
        self._kx, self._ky = ux.size, uy.size
        if method == "adler":
            sx = np.sign(self._cx[:, None] - self._cx[None, :]).astype(np.int8)
            sy = np.sign(self._cy[:, None] - self._cy[None, :]).astype(np.int8)
            self._sign = sx * sy

    def is_degenerate(self, idx):
        cx, cy = self._cx[idx], self._cy[idx]
        return cx.min() == cx.max() or cy.min() == cy.max()

    @staticmethod
    def _mid_ranks(codes, k):
        counts = np.bincount(codes, minlength=k)
        mid = np.cumsum(counts) - (counts - 1) / 2.0
        return mid[codes], counts

    def __call__(self, idx):
        cx, cy = self._cx[idx], self._cy[idx]
        if self.method == "spearman":
            rx, _ = self._mid_ranks(cx, self._kx)
            ry, _ = self._mid_ranks(cy, self._ky)
            return _pearson(rx, ry)
        s = int(self._sign[np.ix_(idx, idx)].sum()) // 2
        if s == 0:
            return 0.0
        nx = np.bincount(cx, minlength=self._kx)
        ny = np.bincount(cy, minlength=self._ky)
        s_min, s_max = _s_extremes(nx[nx > 0], ny[ny > 0])
        return s / s_max if s > 0 else s / -s_min


def adler_tau(x, y):
    """Kendall's S scaled by its attainable extreme under both tie structures.

    Positive S is divided by the largest achievable S and negative S by the
    magnitude of the smallest, so the result spans exactly [-1, 1] and flips
    sign when one variable is reversed.
    """
    x, y = check_paired(x, y)
    check_not_constant(x, y)
    return CorrelationEstimate("adler", _adler_fast(x, y))


def correlate(x, y, method="spearman", cfg=None):
    """Point estimate plus an optional pair-bootstrap CI (skipped if ``cfg`` is None)."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    point = spearman(x, y) if method == "spearman" else adler_tau(x, y)
    if cfg is None:
        return point
    ci = bootstrap_corr_ci(np.column_stack([x, y]), method, cfg)
    return CorrelationEstimate(method, point.estimate, ci)
