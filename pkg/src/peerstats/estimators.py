"""scikit-learn compatible front ends.

Every estimator takes the indicator as ``X`` (1-d, or one column) and the
ordinal quality score as ``y``. Hyper-parameters follow scikit-learn naming
(``n_resamples``, ``random_state``, ``n_jobs``) and are exposed through
``get_params``/``set_params``; fitted results end in an underscore.

>>> est = RankCorrelation(method="adler", n_resamples=0).fit([0.8, 1.3, 2.4], [3, 4, 5])
>>> est.estimate_
1.0
"""

import numpy as np
from sklearn.base import BaseEstimator

from .correlation import adler_bounds, correlate, kendall_counts
from .dataset import Dataset
from .descriptive import differences, idealized_sort_benchmark, ratio_claim, table1
from .resampling import BootstrapConfig
from .utils.validation import check_paired, check_scores


class _BootstrapMixin:
    def _bootstrap_config(self):
        if not self.n_resamples:
            return None
        seed = self.random_state
        if seed is None:
            seed = int(np.random.SeedSequence().entropy % 2**63)
        return BootstrapConfig(
            replicates=int(self.n_resamples),
            level=self.confidence_level,
            seed=int(seed),
            method=self.ci_method,
            workers=int(self.n_jobs or 1),
        )


class GroupDescriptives(_BootstrapMixin, BaseEstimator):
    """Median, mean, sd and a bootstrap mean CI for each quality score.

    Parameters
    ----------
    n_resamples : int, default=10000
        Bootstrap replicates per interval; 0 disables the intervals.
    confidence_level : float, default=0.95
    ci_method : {"percentile", "bca"}, default="percentile"
    sd : {"sample", "population"}, default="sample"
    random_state : int or None, default=0
        Seed for the counter-based replicate streams.
    n_jobs : int, default=1
        Threads evaluating replicates; results do not depend on it.

    Attributes
    ----------
    classes_ : ndarray
        Observed quality scores in ascending order.
    summaries_ : list of GroupSummary
        One per class followed by the pooled ``"All"`` row.
    differences_ : list of DifferenceResult
        Consecutive classes, higher minus lower.
    ratios_ : dict
        ``(hi, lo) -> mean_hi / mean_lo - 1``.
    """

    def __init__(
        self,
        n_resamples=10000,
        confidence_level=0.95,
        ci_method="percentile",
        sd="sample",
        random_state=0,
        n_jobs=1,
    ):
        self.n_resamples = n_resamples
        self.confidence_level = confidence_level
        self.ci_method = ci_method
        self.sd = sd
        self.random_state = random_state
        self.n_jobs = n_jobs

    def fit(self, X, y):
        x, y = check_scores(X, y)
        d = Dataset.from_arrays(x, y)
        cfg = self._bootstrap_config()
        self.summaries_ = table1(d, cfg, self.sd)
        self.differences_ = differences(d, cfg)
        self.classes_ = np.array([r.quality_label for r in self.summaries_[:-1]])
        means = {r.quality_label: r.mean for r in self.summaries_}
        self.ratios_ = {
            (r.group_hi, r.group_lo): ratio_claim(means[r.group_hi], means[r.group_lo])
            for r in self.differences_
        }
        self.n_features_in_ = 1
        return self


class RankCorrelation(_BootstrapMixin, BaseEstimator):
    """Spearman or Adler-normalized Kendall correlation with a pair-bootstrap CI.

    Attributes
    ----------
    estimate_ : float
    ci_ : ConfidenceInterval or None
    pair_counts_ : PairCounts
    s_bounds_ : tuple of int
        Smallest and largest Kendall S attainable under the observed ties.
    """

    def __init__(
        self,
        method="spearman",
        n_resamples=10000,
        confidence_level=0.95,
        ci_method="percentile",
        random_state=0,
        n_jobs=1,
    ):
        self.method = method
        self.n_resamples = n_resamples
        self.confidence_level = confidence_level
        self.ci_method = ci_method
        self.random_state = random_state
        self.n_jobs = n_jobs

    def fit(self, X, y):
        x, y = check_paired(X, y)
        result = correlate(x, y, self.method, self._bootstrap_config())
        self.estimate_ = result.estimate
        self.ci_ = result.ci
        self.pair_counts_ = kendall_counts(x, y)
        self.s_bounds_ = adler_bounds(x, y)
        self.n_features_in_ = 1
        return self


class IdealizedSortBenchmark(BaseEstimator):
    """Counterfactual labelling that gives quality scores in indicator order.

    The observed class sizes are kept; the lowest class receives the lowest
    indicator values. ``labels_`` holds the reassigned class of every sample.
    """

    def fit(self, X, y):
        x, y = check_scores(X, y)
        bench = idealized_sort_benchmark(Dataset.from_arrays(x, y))
        self.classes_ = np.array(bench.qualities)
        self.class_sizes_ = np.array(bench.sizes)
        self.counterfactual_means_ = np.array(bench.counterfactual_means)
        self.actual_means_ = np.array(bench.actual_means)
        self.labels_ = bench.labels
        self.benchmark_ = bench
        self.n_features_in_ = 1
        return self

    def fit_predict(self, X, y):
        return self.fit(X, y).labels_
