"""Per-quality-score summaries, mean differences and the sorted-assignment benchmark."""

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

import numpy as np

from .dataset import partition_by_quality
from .exceptions import DivisionByNonpositive
from .resampling import (
    BootstrapConfig,
    ConfidenceInterval,
    bootstrap_ci,
    bootstrap_diff_ci,
)
from .utils.validation import check_values

ALL = "All"


class Summary(NamedTuple):
    n: int
    median: float
    mean: float
    sd: Optional[float]


@dataclass(frozen=True)
class GroupSummary:
    quality_label: Union[int, str]
    n: int
    median: float
    mean: float
    sd: Optional[float]
    mean_ci: Optional[ConfidenceInterval] = None


@dataclass(frozen=True)
class DifferenceResult:
    group_hi: int
    group_lo: int
    mean_difference: float
    ci: Optional[ConfidenceInterval] = None


@dataclass(frozen=True)
class SortBenchmark:
    """Group means after handing out quality labels in indicator order.

    ``labels`` holds the reassigned label of every observation, aligned with
    the input order.
    """

    qualities: tuple
    sizes: tuple
    counterfactual_means: tuple
    actual_means: tuple
    labels: np.ndarray

    def means(self):
        return list(zip(self.qualities, self.counterfactual_means))

    def differences(self):
        """(hi, lo, counterfactual difference, actual difference) per consecutive pair."""
        q, cf, act = self.qualities, self.counterfactual_means, self.actual_means
        return [
            (q[i + 1], q[i], cf[i + 1] - cf[i], act[i + 1] - act[i])
            for i in range(len(q) - 1)
        ]


def _sd_to_ddof(sd):
    if sd not in ("sample", "population"):
        raise ValueError(f"sd must be 'sample' or 'population', got {sd!r}")
    return 1 if sd == "sample" else 0


def summarize(values, sd="sample"):
    """Count, median, mean and standard deviation of ``values``.

    The median of an even-length sample is the midpoint of the two central
    values. With ``sd="sample"`` the divisor is n - 1 and a single value has
    no standard deviation (``None``).
    """
    ddof = _sd_to_ddof(sd)
    arr = check_values(values)
    n = arr.size
    mean = math.fsum(arr) / n
    if n > ddof:
        sq = math.fsum((arr - mean) ** 2)
        sd_value = math.sqrt(sq / (n - ddof))
    else:
        sd_value = None
    return Summary(n, float(np.median(arr)), mean, sd_value)


def mean_difference(hi, lo):
    hi = check_values(hi, name="hi")
    lo = check_values(lo, name="lo")
    return math.fsum(hi) / hi.size - math.fsum(lo) / lo.size


def ratio_claim(hi_mean, lo_mean):
    """Relative excess ``hi_mean / lo_mean - 1``; 0.3 means 30% higher."""
    if not lo_mean > 0:
        raise DivisionByNonpositive(f"reference mean must be positive, got {lo_mean}")
    return hi_mean / lo_mean - 1.0


def _group_row(label, values, cfg, sd):
    s = summarize(values, sd)
    ci = bootstrap_ci(values, "mean", cfg) if cfg is not None else None
    return GroupSummary(label, s.n, s.median, s.mean, s.sd, ci)


def table1(d, cfg=BootstrapConfig(), sd="sample"):
    """One row per observed quality score (ascending) and a final ``"All"`` row.

    Each row's mean CI resamples within that row's values only. Pass
    ``cfg=None`` to skip the bootstrap.
    """
    rows = [
        _group_row(q, values, cfg, sd) for q, values in partition_by_quality(d).items()
    ]
    rows.append(_group_row(ALL, d.indicators, cfg, sd))
    return rows


def differences(d, cfg=BootstrapConfig()):
    """Mean difference of every pair of consecutive observed quality scores."""
    groups = partition_by_quality(d)
    levels = list(groups)
    out = []
    for lo, hi in zip(levels, levels[1:]):
        ci = bootstrap_diff_ci(groups[hi], groups[lo], cfg) if cfg is not None else None
        out.append(DifferenceResult(hi, lo, mean_difference(groups[hi], groups[lo]), ci))
    return out


def idealized_sort_benchmark(d):
    """Reassign quality labels as if peers had ranked purely by indicator.

    Values are sorted ascending (stable, so ties keep input order) and cut
    into consecutive blocks with the observed group sizes, lowest label
    first.
    """
    groups = partition_by_quality(d)
    qualities = tuple(groups)
    sizes = tuple(len(v) for v in groups.values())
    values = d.indicators
    order = np.argsort(values, kind="stable")
    labels = np.empty(values.size, dtype=int)
    cf_means = []
    start = 0
    for q, size in zip(qualities, sizes):
        block = order[start : start + size]
        labels[block] = q
        cf_means.append(math.fsum(values[block]) / size)
        start += size
    actual = tuple(math.fsum(v) / len(v) for v in groups.values())
    return SortBenchmark(qualities, sizes, tuple(cf_means), actual, labels)

