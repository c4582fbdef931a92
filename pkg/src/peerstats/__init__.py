"""Compare a continuous citation indicator with ordinal peer-review scores.

The package reads (indicator, quality) tables and produces grouped
descriptive statistics with seeded bootstrap confidence intervals,
tie-aware rank correlations, a sorted-assignment benchmark and plot data.
"""

__version__ = "0.1.0"

from .correlation import (
    CorrelationEstimate,
    PairCounts,
    adler_bounds,
    adler_tau,
    average_ranks,
    correlate,
    kendall_counts,
    spearman,
)
from .dataset import (
    Dataset,
    Observation,
    ValidationReport,
    format_dataset,
    parse_dataset,
    partition_by_quality,
    read_dataset,
    validate_dataset,
)
from .descriptive import (
    DifferenceResult,
    GroupSummary,
    SortBenchmark,
    differences,
    idealized_sort_benchmark,
    mean_difference,
    ratio_claim,
    summarize,
    table1,
)
from .estimators import GroupDescriptives, IdealizedSortBenchmark, RankCorrelation
from .figures import BoxPlotSummary, StackedHistogram, boxplot_summary, histogram
from .resampling import (
    BootstrapConfig,
    ConfidenceInterval,
    bootstrap_ci,
    bootstrap_corr_ci,
    bootstrap_diff_ci,
)

__all__ = [
    "BootstrapConfig",
    "BoxPlotSummary",
    "ConfidenceInterval",
    "CorrelationEstimate",
    "Dataset",
    "DifferenceResult",
    "GroupDescriptives",
    "GroupSummary",
    "IdealizedSortBenchmark",
    "Observation",
    "PairCounts",
    "RankCorrelation",
    "SortBenchmark",
    "StackedHistogram",
    "ValidationReport",
    "adler_bounds",
    "adler_tau",
    "average_ranks",
    "bootstrap_ci",
    "bootstrap_corr_ci",
    "bootstrap_diff_ci",
    "boxplot_summary",
    "correlate",
    "differences",
    "format_dataset",
    "histogram",
    "idealized_sort_benchmark",
    "kendall_counts",
    "mean_difference",
    "parse_dataset",
    "partition_by_quality",
    "ratio_claim",
    "read_dataset",
    "spearman",
    "summarize",
    "table1",
    "validate_dataset",
]
