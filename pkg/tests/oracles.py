"""Brute-force reference implementations used only by the tests.

Each oracle follows the textbook definition directly and shares no code
with the package.
"""

import itertools
import math
from fractions import Fraction

import numpy as np


def sign(v):
    return int(v > 0) - int(v < 0)


def classify_pairs(x, y):
    out = dict(concordant=0, discordant=0, ties_x_only=0, ties_y_only=0, ties_both=0)
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = sign(x[i] - x[j]), sign(y[i] - y[j])
            if a == 0 and b == 0:
                out["ties_both"] += 1
            elif a == 0:
                out["ties_x_only"] += 1
            elif b == 0:
                out["ties_y_only"] += 1
            elif a == b:
                out["concordant"] += 1
            else:
                out["discordant"] += 1
    return out


def s_statistic(x, y):
    c = classify_pairs(x, y)
    return c["concordant"] - c["discordant"]


_PERMS = {}


def _perms(n):
    if n not in _PERMS:
        _PERMS[n] = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    return _PERMS[n]


def s_range_by_enumeration(x, y):
    """(min S, max S) over every rearrangement of ``y`` against fixed ``x``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.size
    perms = _perms(n)
    yp = y[perms]
    total = np.zeros(len(perms), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            sx = sign(x[i] - x[j])
            if sx:
                total += sx * np.sign(yp[:, i] - yp[:, j]).astype(np.int64)
    return int(total.min()), int(total.max())


def mid_ranks(values):
    """Rank = (#smaller) + (#equal + 1) / 2."""
    return [
        sum(w < v for w in values) + (sum(w == v for w in values) + 1) / 2
        for v in values
    ]


def pearson(a, b):
    n = len(a)
    ma, mb = sum(a) / n, sum(b) / n
    num = sum((p - ma) * (q - mb) for p, q in zip(a, b))
    den = math.sqrt(sum((p - ma) ** 2 for p in a) * sum((q - mb) ** 2 for q in b))
    return num / den


def spearman_shortcut(x, y):
    """1 - 6 sum d^2 / (n (n^2 - 1)); valid only without ties."""
    rx, ry = mid_ranks(list(x)), mid_ranks(list(y))
    n = len(x)
    d2 = sum((a - b) ** 2 for a, b in zip(rx, ry))
    return 1 - 6 * d2 / (n * (n * n - 1))


def exact_summary(values, ddof=1):
    """(median, mean, sd) from exact rational arithmetic, rounded once at the end."""
    fr = sorted(Fraction(v) for v in values)
    n = len(fr)
    mean = sum(fr) / n
    if n % 2:
        median = fr[n // 2]
    else:
        median = (fr[n // 2 - 1] + fr[n // 2]) / 2
    var = sum((v - mean) ** 2 for v in fr) / (n - ddof) if n > ddof else None
    sd = math.sqrt(var) if var is not None else None
    return float(median), float(mean), sd


def linear_quantile(values, p):
    """Order statistic at position (n - 1) p, interpolated linearly."""
    s = sorted(values)
    h = (len(s) - 1) * p
    lo = math.floor(h)
    hi = min(lo + 1, len(s) - 1)
    return s[lo] + (h - lo) * (s[hi] - s[lo])
