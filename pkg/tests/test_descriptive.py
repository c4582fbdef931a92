import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import exact_summary
from peerstats import (
    BootstrapConfig,
    Dataset,
    differences,
    idealized_sort_benchmark,
    mean_difference,
    ratio_claim,
    summarize,
    table1,
)
from peerstats.exceptions import DivisionByNonpositive, EmptyGroup

FAST = BootstrapConfig(replicates=200, seed=5)


def test_summarize_triple():
    s = summarize([1, 2, 3])
    assert (s.n, s.median, s.mean, s.sd) == (3, 2.0, 2.0, 1.0)


def test_summarize_even_median():
    assert summarize([1, 2, 3, 4]).median == 2.5


def test_summarize_singleton_has_no_sample_sd():
    s = summarize([4.2])
    assert s.sd is None
    assert summarize([4.2], sd="population").sd == 0.0


def test_population_sd():
    assert summarize([1, 3], sd="population").sd == 1.0
    assert summarize([1, 3]).sd == pytest.approx(math.sqrt(2))


def test_summarize_empty():
    with pytest.raises(EmptyGroup):
        summarize([])


def test_mean_difference():
    assert mean_difference([3, 5], [1, 1, 1]) == 3.0
    assert mean_difference([1.1, 2.3], [1.1, 2.3]) == 0.0
    with pytest.raises(EmptyGroup):
        mean_difference([], [1.0])


@pytest.mark.parametrize(
    "hi, lo, expected",
    [(2, 2, 0.0), (3, 2, 0.5), (1.99, 1.55, 0.28387)],
)
def test_ratio_claim(hi, lo, expected):
    assert ratio_claim(hi, lo) == pytest.approx(expected, abs=1e-5)


@pytest.mark.parametrize("lo", [0.0, -1.0])
def test_ratio_claim_nonpositive(lo):
    with pytest.raises(DivisionByNonpositive):
        ratio_claim(1.0, lo)


def test_table1_single_group_matches_all_row():
    d = Dataset.from_arrays([1.0, 3.0], [4, 4])
    group, everyone = table1(d, FAST)
    assert group.quality_label == 4 and everyone.quality_label == "All"
    for field in ("n", "median", "mean", "sd"):
        assert getattr(group, field) == getattr(everyone, field)
    assert group.mean_ci == everyone.mean_ci


def test_table1_rows_and_all(proxy_dataset):
    rows = table1(proxy_dataset, FAST)
    assert [r.quality_label for r in rows] == [3, 4, 5, "All"]
    assert rows[-1].n == sum(r.n for r in rows[:-1]) == 147
    s = summarize(proxy_dataset.indicators)
    assert (rows[-1].median, rows[-1].mean, rows[-1].sd) == (s.median, s.mean, s.sd)
    for r in rows:
        assert r.mean_ci.low <= r.mean <= r.mean_ci.high


def test_table1_without_bootstrap(proxy_dataset):
    assert all(r.mean_ci is None for r in table1(proxy_dataset, None))


def test_differences_consecutive(proxy_dataset):
    diffs = differences(proxy_dataset, FAST)
    assert [(r.group_hi, r.group_lo) for r in diffs] == [(4, 3), (5, 4)]
    rows = {r.quality_label: r.mean for r in table1(proxy_dataset, None)}
    for r in diffs:
        assert r.mean_difference == pytest.approx(rows[r.group_hi] - rows[r.group_lo])


def test_sort_benchmark_block_means():
    # indicator values 1..6, sizes (2, 2, 2), labels shuffled
    d = Dataset.from_arrays([4, 1, 6, 2, 5, 3], [3, 5, 4, 3, 5, 4])
    bench = idealized_sort_benchmark(d)
    assert bench.means() == [(3, 1.5), (4, 3.5), (5, 5.5)]
    assert [diff[2] for diff in bench.differences()] == [2.0, 2.0]
    assert list(bench.labels) == [4, 3, 5, 3, 5, 4]


def test_sort_benchmark_fixed_point():
    d = Dataset.from_arrays([0.5, 0.7, 1.1, 1.4, 1.9, 2.5, 3.0], [3, 3, 4, 4, 4, 5, 5])
    bench = idealized_sort_benchmark(d)
    assert bench.counterfactual_means == pytest.approx(bench.actual_means)
    assert list(bench.labels) == list(d.qualities)


def test_sort_benchmark_stable_ties():
    d = Dataset.from_arrays([1.0, 1.0, 1.0, 2.0], [5, 3, 4, 4])
    bench = idealized_sort_benchmark(d)
    # sizes 3:1, 4:2, 5:1; the first tied 1.0 (input position 0) goes to label 3
    assert list(bench.labels) == [3, 4, 4, 5]


scores = st.lists(
    st.tuples(
        st.floats(min_value=0.01, max_value=10, allow_nan=False), st.integers(3, 5)
    ),
    min_size=1,
    max_size=80,
)


@given(scores)
def test_counterfactual_means_non_decreasing(obs):
    d = Dataset.from_arrays([o[0] for o in obs], [o[1] for o in obs])
    means = idealized_sort_benchmark(d).counterfactual_means
    assert all(a <= b for a, b in zip(means, means[1:]))


finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


@given(
    st.lists(finite, min_size=2, max_size=50),
    st.floats(min_value=-1e3, max_value=1e3),
    st.floats(min_value=1e-3, max_value=1e3),
)
def test_affine_equivariance(values, shift, scale):
    base = summarize(values)
    moved = summarize([scale * v + shift for v in values])
    tol = 1e-9 * (abs(shift) + scale * max(map(abs, values)) + 1)
    assert moved.mean == pytest.approx(scale * base.mean + shift, abs=tol)
    assert moved.median == pytest.approx(scale * base.median + shift, abs=tol)
    assert moved.sd == pytest.approx(scale * base.sd, abs=tol)


@settings(max_examples=200)
@given(st.lists(finite, min_size=1, max_size=300))
def test_summarize_matches_exact_arithmetic(values):
    s = summarize(values)
    median, mean, sd = exact_summary(values)
    scale = max(map(abs, values))
    assert s.median == pytest.approx(median, rel=1e-12, abs=1e-15 * scale)
    assert s.mean == pytest.approx(mean, rel=1e-12, abs=1e-300)
    if sd is None:
        assert s.sd is None
    else:
        assert s.sd == pytest.approx(sd, rel=1e-12, abs=1e-12 * scale)


@given(st.lists(finite, min_size=1, max_size=100))
def test_summary_bounds(values):
    s = summarize(values)
    lo, hi = min(values), max(values)
    assert lo <= s.median <= hi
    assert lo - 1e-9 * abs(lo) <= s.mean <= hi + 1e-9 * abs(hi)
    assert s.sd is None or s.sd >= 0


def test_summarize_accepts_numpy():
    s = summarize(np.array([[1.0], [2.0], [6.0]]))
    assert (s.n, s.median, s.mean) == (3, 2.0, 3.0)
