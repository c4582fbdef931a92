"""Reading, validating and partitioning (indicator, quality) score tables.

The input is a plain two-column table with one research group per line::

    CPP/FCSm  quality
    1.04      3
    1.45      4

Columns may be separated by runs of spaces, a single tab or a single comma.
The column order defaults to (indicator, quality); when exactly one column is
made of integers in 1..5 it is taken as the quality column regardless of
position.
"""

import logging
import math
import re
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .exceptions import (
    EmptyInput,
    MalformedLine,
    NonpositiveIndicator,
    QualityOutOfRange,
)

logger = logging.getLogger(__name__)

QUALITY_LEVELS = (1, 2, 3, 4, 5)

_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


@dataclass(frozen=True)
class Observation:
    indicator: float
    quality: int

    def __post_init__(self):
        if not (math.isfinite(self.indicator) and self.indicator > 0):
            raise NonpositiveIndicator(
                f"indicator must be positive and finite, got {self.indicator!r}"
            )
        if self.quality not in QUALITY_LEVELS:
            raise QualityOutOfRange(f"quality must be in 1..5, got {self.quality!r}")


@dataclass(frozen=True)
class Dataset:
    observations: tuple
    source_label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "observations", tuple(self.observations))
        if not self.observations:
            raise EmptyInput("dataset has no observations")

    def __len__(self):
        return len(self.observations)

    @property
    def indicators(self):
        return np.array([o.indicator for o in self.observations], dtype=float)

    @property
    def qualities(self):
        return np.array([o.quality for o in self.observations], dtype=int)

    @classmethod
    def from_arrays(cls, indicators, qualities, source_label=""):
        indicators = np.asarray(indicators, dtype=float).ravel()
        qualities = np.asarray(qualities).ravel()
        if indicators.shape != qualities.shape:
            raise ValueError("indicators and qualities differ in length")
        obs = []
        for value, q in zip(indicators.tolist(), qualities.tolist()):
            if float(q) != int(q):
                raise QualityOutOfRange(f"quality must be an integer, got {q!r}")
            obs.append(Observation(float(value), int(q)))
        return cls(tuple(obs), source_label)


@dataclass(frozen=True)
class ValidationReport:
    total: int
    counts_by_quality: dict = field(default_factory=dict)
    min_indicator: float = math.nan
    max_indicator: float = math.nan


def _split(line):
    if "," in line:
        tokens = line.split(",")
    elif "\t" in line:
        tokens = line.split("\t")
    else:
        tokens = line.split()
    return [t.strip() for t in tokens]


def _is_quality_column(values):
    return all(v.is_integer() and int(v) in QUALITY_LEVELS for v in values)


def parse_dataset(text, *, source_label="", column_order="auto"):
    """Parse a two-column score table into a :class:`Dataset`.

    Parameters
    ----------
    text : str
        Full file contents. LF and CRLF line endings are both accepted;
        blank lines are skipped.
    source_label : str
        Free-text provenance stored on the result.
    column_order : {"auto", "indicator-quality", "quality-indicator"}
        ``"auto"`` keeps (indicator, quality) unless exactly one column
        consists solely of integers in 1..5, in which case that column is
        the quality score.

    Raises
    ------
    EmptyInput, MalformedLine, QualityOutOfRange, NonpositiveIndicator
    """
    if column_order not in ("auto", "indicator-quality", "quality-indicator"):
        raise ValueError(f"unknown column_order {column_order!r}")

    rows = []  # (line number, [float, float])
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = _split(line)
        numeric = [bool(_NUMBER.fullmatch(t)) for t in tokens]
        words = [t for t, ok in zip(tokens, numeric) if t and not ok]
        if not rows and not header_seen and words:
            header_seen = True
            continue
        if len(tokens) != 2:
            raise MalformedLine(f"expected 2 columns, found {len(tokens)}", lineno)
        if not all(numeric):
            bad = tokens[numeric.index(False)]
            raise MalformedLine(f"non-numeric token {bad!r}", lineno)
        rows.append((lineno, [float(t) for t in tokens]))

    if not rows:
        raise EmptyInput("no data lines")

    quality_col = 1
    if column_order == "quality-indicator":
        quality_col = 0
    elif column_order == "auto":
        first = _is_quality_column([r[1][0] for r in rows])
        second = _is_quality_column([r[1][1] for r in rows])
        if first and not second:
            quality_col = 0
            logger.info(
                "first column holds integer scores in 1..5; reading it as quality"
            )
    indicator_col = 1 - quality_col

    obs = []
    for lineno, values in rows:
        q = values[quality_col]
        if not q.is_integer() or int(q) not in QUALITY_LEVELS:
            raise QualityOutOfRange(f"quality score {q:g} not in 1..5", lineno)
        value = values[indicator_col]
        if not (math.isfinite(value) and value > 0):
            raise NonpositiveIndicator(f"indicator {value!r} is not positive", lineno)
        obs.append(Observation(value, int(q)))
    return Dataset(tuple(obs), source_label)


def read_dataset(path, **kwargs):
    with open(path, encoding="utf-8-sig") as fh:
        text = fh.read()
    kwargs.setdefault("source_label", str(path))
    return parse_dataset(text, **kwargs)


def format_dataset(d, sep=" "):
    """Serialize back to two-column text; ``parse_dataset`` inverts this."""
    return "".join(f"{o.indicator!r}{sep}{o.quality}\n" for o in d.observations)


def validate_dataset(d):
    counts = Counter(o.quality for o in d.observations)
    values = d.indicators
    return ValidationReport(
        total=len(d),
        counts_by_quality={q: counts[q] for q in sorted(counts)},
        min_indicator=float(values.min()),
        max_indicator=float(values.max()),
    )


def partition_by_quality(d):
    """Map each observed quality score to its indicator values, in input order."""
    groups = {}
    for o in d.observations:
        groups.setdefault(o.quality, []).append(o.indicator)
    return {q: groups[q] for q in sorted(groups)}
