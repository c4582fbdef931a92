"""Assemble analysis sections and render them as text, CSV or JSON.

A report is an ordered mapping ``section name -> list of records``. Records
are dicts whose values are scalars, nested dicts or lists of scalars. JSON
keeps the nesting; CSV flattens nested keys with ``_`` and joins lists with
``;``, writing one header-led block per section. Both carry full-precision
numbers. Text output rounds every float to two decimals.
"""

import csv
import dataclasses
import io
import json
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from .correlation import adler_bounds, correlate, kendall_counts
from .dataset import validate_dataset
from .descriptive import (
    differences,
    idealized_sort_benchmark,
    ratio_claim,
    table1,
)
from .figures import boxplots, histogram

COMMANDS = ("validate", "table1", "diffs", "correlations", "counterfactual", "figures")


def _plain(obj):
    if dataclasses.is_dataclass(obj):
        return {f.name: _plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def run_section_records(d, cfg, sd):
    return [
        {
            "source": d.source_label,
            "seed": cfg.seed,
            "replicates": cfg.replicates,
            "level": cfg.level,
            "ci_method": cfg.method,
            "sd": sd,
        }
    ]


def validate_sections(d):
    return {"validation": [_plain(validate_dataset(d))]}


def table1_sections(d, cfg, sd="sample"):
    return {"table1": [_plain(row) for row in table1(d, cfg, sd)]}


def diffs_sections(d, cfg):
    diffs = differences(d, cfg)
    means = {r.quality_label: r.mean for r in table1(d, None)}
    ratios = [
        {
            "group_hi": r.group_hi,
            "group_lo": r.group_lo,
            "mean_hi": means[r.group_hi],
            "mean_lo": means[r.group_lo],
            "ratio": ratio_claim(means[r.group_hi], means[r.group_lo]),
        }
        for r in diffs
    ]
    return {"differences": [_plain(r) for r in diffs], "ratios": ratios}


def correlation_sections(d, cfg):
    x, y = d.indicators, d.qualities
    rows = [_plain(correlate(x, y, method, cfg)) for method in ("spearman", "adler")]
    counts = _plain(kendall_counts(x, y))
    counts["s_min"], counts["s_max"] = adler_bounds(x, y)
    return {"correlations": rows, "kendall_pairs": [counts]}


def counterfactual_sections(d):
    bench = idealized_sort_benchmark(d)
    means = [
        {"quality": q, "n": n, "counterfactual_mean": cf, "actual_mean": act}
        for q, n, cf, act in zip(
            bench.qualities, bench.sizes, bench.counterfactual_means, bench.actual_means
        )
    ]
    diffs = [
        {
            "group_hi": hi,
            "group_lo": lo,
            "counterfactual_difference": cf,
            "actual_difference": act,
        }
        for hi, lo, cf, act in bench.differences()
    ]
    return {"counterfactual_means": means, "counterfactual_differences": diffs}


def figure_sections(d, bin_width=0.25, origin=0.0):
    hist = histogram(d, bin_width, origin)
    return {
        "boxplots": [_plain(b) for b in boxplots(d)],
        "histogram_params": [{"bin_width": hist.bin_width, "origin": hist.origin}],
        "histogram": [_plain(b) for b in hist.bins],
    }


def build_report(command, d, cfg, *, sd="sample", bin_width=0.25, origin=0.0):
    """Sections for one CLI subcommand (``"all"`` runs every one of them)."""
    builders = {
        "validate": lambda: validate_sections(d),
        "table1": lambda: table1_sections(d, cfg, sd),
        "diffs": lambda: diffs_sections(d, cfg),
        "correlations": lambda: correlation_sections(d, cfg),
        "counterfactual": lambda: counterfactual_sections(d),
        "figures": lambda: figure_sections(d, bin_width, origin),
    }
    if command != "all" and command not in builders:
        raise ValueError(f"unknown command {command!r}")
    report = {"run": run_section_records(d, cfg, sd)}
    for name in COMMANDS if command == "all" else (command,):
        report.update(builders[name]())
    return report


# -- rendering ---------------------------------------------------------------


def round2(value):
    """Round half away from zero to two decimals, as a string."""
    return str(Decimal(repr(float(value))).quantize(Decimal("0.01"), ROUND_HALF_UP))


def flatten(record, prefix=""):
    out = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            out.update(flatten(value, name + "_"))
        elif isinstance(value, list):
            out[name] = ";".join(repr(v) if isinstance(v, float) else str(v) for v in value)
        else:
            out[name] = value
    return out


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_json(report):
    return json.dumps(report, indent=2) + "\n"


def to_csv(report):
    buf = io.StringIO()
    for i, (name, records) in enumerate(report.items()):
        if i:
            buf.write("\n")
        buf.write(f"# {name}\n")
        rows = [flatten(r) for r in records]
        header = list(dict.fromkeys(k for row in rows for k in row))
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_csv_cell(row.get(k)) for k in header])
    return buf.getvalue()


def parse_csv(text):
    """Inverse of :func:`to_csv` for flat values (used to compare with JSON)."""
    report = {}
    for block in text.strip("\n").split("\n\n"):
        lines = block.split("\n")
        name = lines[0][2:]
        reader = csv.reader(lines[1:])
        header = next(reader)
        report[name] = [
            {k: _parse_cell(v) for k, v in zip(header, row)} for row in reader
        ]
    return report


def _parse_cell(cell):
    if cell == "":
        return None
    for conv in (int, float):
        try:
            return conv(cell)
        except ValueError:
            pass
    return cell


def _fmt(value):
    if value is None:
        return "n/a"
    if isinstance(value, float):
        return round2(value)
    return str(value)


def _table1_text(records):
    header = [
        "Quality score",
        "No. of research groups",
        "Median",
        "Mean",
        "St. dev.",
        "95% conf. int.",
    ]
    rows = []
    for r in records:
        ci = r.get("mean_ci")
        interval = f"{round2(ci['low'])}-{round2(ci['high'])}" if ci else "n/a"
        rows.append(
            [str(r["quality_label"]), str(r["n"]), _fmt(r["median"]), _fmt(r["mean"]),
             _fmt(r["sd"]), interval]
        )
    if records and records[0].get("mean_ci"):
        level = records[0]["mean_ci"]["level"]
        header[-1] = f"{level * 100:g}% conf. int."
    return _align(header, rows)


def _align(header, rows):
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(str(c).rjust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def to_text(report):
    blocks = []
    for name, records in report.items():
        if name == "table1":
            body = _table1_text(records)
        else:
            flat = [flatten(r) for r in records]
            header = list(dict.fromkeys(k for row in flat for k in row))
            rows = [[_fmt_cell(row.get(k)) for k in header] for row in flat]
            body = _align(header, rows)
        blocks.append(f"== {name} ==\n{body}\n")
    return "\n".join(blocks)


def _fmt_cell(value):
    if isinstance(value, str) and ";" in value:
        return ";".join(_fmt(_parse_cell(v)) for v in value.split(";"))
    return _fmt(value)


RENDERERS = {"text": to_text, "csv": to_csv, "json": to_json}


def render(report, fmt="text"):
    return RENDERERS[fmt](report)

