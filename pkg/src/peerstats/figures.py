"""Plot-ready data: per-group box plots and a histogram stacked by quality score.

Nothing here draws; the outputs are plain numbers for a plotting tool.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .dataset import partition_by_quality
from .utils.validation import check_values

WHISKER_FACTOR = 1.5


@dataclass(frozen=True)
class BoxPlotSummary:
    quality_label: object
    n: int
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float
    whisker_low: float
    whisker_high: float
    outliers: tuple = ()


@dataclass(frozen=True)
class HistogramBin:
    lower: float
    upper: float
    counts: dict = field(default_factory=dict)


@dataclass(frozen=True)
class StackedHistogram:
    bin_width: float
    origin: float
    bins: tuple = ()

    def total(self):
        return sum(sum(b.counts.values()) for b in self.bins)


def boxplot_summary(values, quality_label=None):
    """Tukey box plot statistics.

    Quartiles interpolate linearly between order statistics (so the first
    quartile of 1..5 is 2). Whiskers reach the most extreme observations
    within 1.5 IQR of the box; anything beyond is an outlier. A whisker
    never stops inside the box: when every inlier on one side lies within
    the box (interpolated quartiles can sit past the last inlier), the
    whisker ends at the quartile.

    >>> b = boxplot_summary([1, 2, 3, 4, 100])
    >>> b.whisker_high, b.outliers
    (4.0, (100.0,))
    """
    arr = np.sort(check_values(values))
    q1, median, q3 = (float(v) for v in np.quantile(arr, [0.25, 0.5, 0.75]))
    iqr = q3 - q1
    lo_fence = q1 - WHISKER_FACTOR * iqr
    hi_fence = q3 + WHISKER_FACTOR * iqr
    inside = arr[(arr >= lo_fence) & (arr <= hi_fence)]
    outliers = arr[(arr < lo_fence) | (arr > hi_fence)]
    return BoxPlotSummary(
        quality_label=quality_label,
        n=int(arr.size),
        minimum=float(arr[0]),
        q1=q1,
        median=median,
        q3=q3,
        maximum=float(arr[-1]),
        whisker_low=min(float(inside.min()), q1),
        whisker_high=max(float(inside.max()), q3),
        outliers=tuple(float(v) for v in outliers),
    )


def boxplots(d):
    return [boxplot_summary(v, q) for q, v in partition_by_quality(d).items()]


def _bin_index(value, origin, width):
    # floor division can land one bin off for values sitting on an edge
    k = math.floor((value - origin) / width)
    while value >= origin + (k + 1) * width:
        k += 1
    while value < origin + k * width:
        k -= 1
    return k


def histogram(d, bin_width=0.25, origin=0.0):
    """Counts per quality score in bins ``[origin + k*w, origin + (k+1)*w)``.

    Bins run from the one holding the smallest value to the one holding the
    largest; every bin lists every observed quality score, zeros included.
    """
    if not bin_width > 0:
        raise ValueError(f"bin_width must be positive, got {bin_width}")
    bin_width = float(bin_width)
    origin = float(origin)
    groups = partition_by_quality(d)
    index = {
        q: [_bin_index(v, origin, bin_width) for v in values]
        for q, values in groups.items()
    }
    all_k = [k for ks in index.values() for k in ks]
    bins = []
    for k in range(min(all_k), max(all_k) + 1):
        counts = {q: ks.count(k) for q, ks in index.items()}
        bins.append(
            HistogramBin(origin + k * bin_width, origin + (k + 1) * bin_width, counts)
        )
    return StackedHistogram(bin_width, origin, tuple(bins))
