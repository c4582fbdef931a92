"""Seeded nonparametric bootstrap.

Randomness for replicate ``i`` comes from a Philox generator whose key is
derived from the seed and whose counter encodes ``(attempt, i)``. A replicate
therefore draws the same resample no matter which worker evaluates it or in
what order, so sequential and threaded runs agree bit for bit.

Intervals are percentile intervals by default (quantiles with linear
interpolation between order statistics); bias-corrected and accelerated
(BCa) intervals are available through ``BootstrapConfig(method="bca")``.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from statistics import NormalDist

import numpy as np

from .exceptions import (
    DegenerateInput,
    EmptyInput,
    StatisticUndefined,
    TooManyDegenerateResamples,
)
from .utils.validation import check_level, check_paired, check_values

MAX_REDRAW_FRACTION = 0.10

_CHUNK = 512


@dataclass(frozen=True)
class BootstrapConfig:
    """Parameters shared by every resampling run.

    ``workers`` only controls how many threads evaluate replicates; it never
    changes the result.
    """

    replicates: int = 10000
    level: float = 0.95
    seed: int = 0
    method: str = "percentile"
    workers: int = 1

    def __post_init__(self):
        if int(self.replicates) < 1:
            raise ValueError(f"replicates must be >= 1, got {self.replicates}")
        check_level(self.level)
        if int(self.seed) < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.method not in ("percentile", "bca"):
            raise ValueError(f"unknown CI method {self.method!r}")
        if int(self.workers) < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class ConfidenceInterval:
    low: float
    high: float
    level: float
    replicates_used: int
    redraws: int = 0

    def __post_init__(self):
        if self.low > self.high:
            raise ValueError(f"interval bounds out of order: {self.low} > {self.high}")

    def __iter__(self):
        return iter((self.low, self.high))


def _key(seed):
    return np.random.SeedSequence(int(seed)).generate_state(2, np.uint64)


def replicate_rng(seed, replicate, attempt=0):
    """Generator for one replicate, a pure function of its arguments."""
    return np.random.Generator(
        np.random.Philox(key=_key(seed), counter=[0, 0, attempt, replicate])
    )


class _Streams:
    def __init__(self, seed):
        self._key = _key(seed)

    def __call__(self, replicate, attempt=0):
        return np.random.Generator(
            np.random.Philox(key=self._key, counter=[0, 0, attempt, replicate])
        )


def _run_chunked(fn, replicates, workers):
    """Evaluate ``fn(start, stop)`` over fixed chunks and concatenate in order.

    ``fn`` returns a tuple of arrays (one entry per replicate in the chunk).
    Chunk boundaries do not depend on ``workers``.
    """
    bounds = [(s, min(s + _CHUNK, replicates)) for s in range(0, replicates, _CHUNK)]
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: fn(*b), bounds))
    else:
        parts = [fn(*b) for b in bounds]
    return tuple(np.concatenate(cols) for cols in zip(*parts))


def _mean(a, axis=-1):
    return np.mean(a, axis=axis)


def _median(a, axis=-1):
    return np.median(a, axis=axis)


def _sd(a, axis=-1):
    return np.std(a, axis=axis, ddof=1)


def _sd_population(a, axis=-1):
    return np.std(a, axis=axis, ddof=0)


STATISTICS = {
    "mean": _mean,
    "median": _median,
    "sd": _sd,
    "sd_population": _sd_population,
}


def _resolve_statistic(statistic):
    if callable(statistic):
        return lambda m: np.array([float(statistic(row)) for row in m])
    try:
        fn = STATISTICS[statistic]
    except KeyError:
        raise ValueError(
            f"unknown statistic {statistic!r}; choose from {sorted(STATISTICS)}"
        ) from None
    return lambda m: fn(m, axis=-1)


def _quantiles(reps, probs):
    return [float(q) for q in np.quantile(reps, probs)]


def _percentile_interval(reps, level):
    alpha = 1.0 - level
    return _quantiles(reps, [alpha / 2, 1 - alpha / 2])


def _acceleration(jackknife_groups):
    """Jackknife acceleration; one array of leave-one-out values per sample."""
    num = 0.0
    den = 0.0
    for jack in jackknife_groups:
        jack = np.asarray(jack, dtype=float)
        n = jack.size
        if n == 0:
            continue
        u = jack.mean() - jack
        num += np.sum(u**3) / n**3
        den += np.sum(u**2) / n**2
    if den == 0:
        return 0.0
    return float(num / (6.0 * den**1.5))


def _bca_interval(reps, estimate, jackknife_groups, level):
    reps = np.asarray(reps)
    if reps.min() == reps.max():
        return [float(reps[0]), float(reps[0])]
    norm = NormalDist()
    below = np.mean(reps < estimate) + 0.5 * np.mean(reps == estimate)
    eps = 1.0 / (2 * reps.size)
    z0 = norm.inv_cdf(min(max(below, eps), 1 - eps))
    a = _acceleration(jackknife_groups)
    alpha = 1.0 - level
    probs = []
    for p in (alpha / 2, 1 - alpha / 2):
        z = norm.inv_cdf(p)
        probs.append(norm.cdf(z0 + (z0 + z) / (1 - a * (z0 + z))))
    return _quantiles(reps, probs)


def _jackknife(values, stat):
    n = values.size
    if n < 2:
        return np.array([])
    mask = ~np.eye(n, dtype=bool)
    loo = np.broadcast_to(values, (n, n))[mask].reshape(n, n - 1)
    return stat(loo)


def _make_interval(reps, cfg, estimate=None, jackknife_groups=None, redraws=0):
    if cfg.method == "bca":
        low, high = _bca_interval(reps, estimate, jackknife_groups, cfg.level)
    else:
        low, high = _percentile_interval(reps, cfg.level)
    return ConfidenceInterval(low, high, cfg.level, int(reps.size), redraws)


def bootstrap_replicates(values, statistic="mean", cfg=BootstrapConfig()):
    """Statistic evaluated on each of ``cfg.replicates`` resamples of ``values``."""
    values = check_values(values, error=EmptyInput)
    if statistic == "sd" and values.size < 2:
        raise StatisticUndefined("sample sd of a single value is undefined")
    stat = _resolve_statistic(statistic)
    n = values.size
    streams = _Streams(cfg.seed)

    def chunk(start, stop):
        idx = np.stack([streams(i).integers(0, n, size=n) for i in range(start, stop)])
        return (stat(values[idx]),)

    (reps,) = _run_chunked(chunk, int(cfg.replicates), int(cfg.workers))
    return reps


def bootstrap_ci(values, statistic="mean", cfg=BootstrapConfig()):
    """Bootstrap confidence interval for a one-sample statistic.

    ``statistic`` is one of ``"mean"``, ``"median"``, ``"sd"``,
    ``"sd_population"`` or a callable mapping a 1-d array to a float.

    >>> ci = bootstrap_ci([2.0, 2.0, 2.0, 2.0], "mean", BootstrapConfig(replicates=50))
    >>> (ci.low, ci.high)
    (2.0, 2.0)
    """
    values = check_values(values, error=EmptyInput)
    reps = bootstrap_replicates(values, statistic, cfg)
    if cfg.method == "bca":
        stat = _resolve_statistic(statistic)
        estimate = float(stat(values[None, :])[0])
        if statistic == "sd" and values.size < 3:
            jack = np.array([])
        else:
            jack = _jackknife(values, stat)
        return _make_interval(reps, cfg, estimate, [jack])
    return _make_interval(reps, cfg)


def bootstrap_diff_replicates(hi, lo, cfg=BootstrapConfig()):
    hi = check_values(hi, name="hi", error=EmptyInput)
    lo = check_values(lo, name="lo", error=EmptyInput)
    n_hi, n_lo = hi.size, lo.size
    streams = _Streams(cfg.seed)

    def chunk(start, stop):
        out = np.empty(stop - start)
        for k, i in enumerate(range(start, stop)):
            rng = streams(i)
            a = rng.integers(0, n_hi, size=n_hi)
            b = rng.integers(0, n_lo, size=n_lo)
            out[k] = hi[a].mean() - lo[b].mean()
        return (out,)

    (reps,) = _run_chunked(chunk, int(cfg.replicates), int(cfg.workers))
    return reps


def bootstrap_diff_ci(hi, lo, cfg=BootstrapConfig()):
    """CI for ``mean(hi) - mean(lo)``; the two groups are resampled independently."""
    hi = check_values(hi, name="hi", error=EmptyInput)
    lo = check_values(lo, name="lo", error=EmptyInput)
    reps = bootstrap_diff_replicates(hi, lo, cfg)
    if cfg.method == "bca":
        estimate = hi.mean() - lo.mean()
        jack_hi = _jackknife(hi, _mean) - lo.mean() if hi.size > 1 else []
        jack_lo = hi.mean() - _jackknife(lo, _mean) if lo.size > 1 else []
        return _make_interval(reps, cfg, estimate, [jack_hi, jack_lo])
    return _make_interval(reps, cfg)


def bootstrap_corr_replicates(x, y, method="spearman", cfg=BootstrapConfig()):
    """Pair-resampled correlation replicates and the number of redraws.

    A resample in which either coordinate is constant is redrawn from the
    same replicate's next counter block until it is usable.
    """
    x, y = check_paired(x, y)
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise DegenerateInput("input vector is constant; correlation is undefined")
    from .correlation import ResampledCorrelation

    corr = ResampledCorrelation(x, y, method)
    n = x.size
    replicates = int(cfg.replicates)
    limit = int(MAX_REDRAW_FRACTION * replicates)
    streams = _Streams(cfg.seed)

    def chunk(start, stop):
        out = np.empty(stop - start)
        redraws = np.zeros(stop - start, dtype=np.int64)
        for k, i in enumerate(range(start, stop)):
            attempt = 0
            while True:
                idx = streams(i, attempt).integers(0, n, size=n)
                if not corr.is_degenerate(idx):
                    break
                attempt += 1
                if attempt > limit:
                    raise TooManyDegenerateResamples(
                        f"replicate {i} stayed degenerate after {attempt} draws"
                    )
            out[k] = corr(idx)
            redraws[k] = attempt
        return out, redraws

    reps, redraws = _run_chunked(chunk, replicates, int(cfg.workers))
    total = int(redraws.sum())
    if total > limit:
        raise TooManyDegenerateResamples(
            f"{total} of {replicates} resamples were degenerate and redrawn"
        )
    return reps, total


def bootstrap_corr_ci(pairs, method="spearman", cfg=BootstrapConfig()):
    """Case-resampling CI for a rank correlation of ``pairs`` (an (n, 2) array).

    ``method`` is ``"spearman"`` or ``"adler"``. The returned interval's
    ``redraws`` field counts degenerate resamples that were replaced.
    """
    pairs = np.asarray(pairs, dtype=float)
    if pairs.size == 0:
        raise EmptyInput("no pairs")
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise ValueError(f"pairs must have shape (n, 2), got {pairs.shape}")
    x, y = pairs[:, 0], pairs[:, 1]
    reps, redraws = bootstrap_corr_replicates(x, y, method, cfg)
    if cfg.method == "bca":
        from .correlation import ResampledCorrelation

        corr = ResampledCorrelation(x, y, method)
        everyone = np.arange(x.size)
        jack = []
        for i in range(x.size):
            idx = np.delete(everyone, i)
            if not corr.is_degenerate(idx):
                jack.append(corr(idx))
        return _make_interval(reps, cfg, corr(everyone), [jack], redraws)
    return _make_interval(reps, cfg, redraws=redraws)
