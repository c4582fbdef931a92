"""Command line interface.

    peerstats table1 --input data.txt --seed 42 --format csv

Exit status: 0 on success, 1 for problems with the data, 2 for usage
errors, 3 for anything unexpected.
"""

import argparse
import logging
import sys

from . import __version__
from .dataset import read_dataset
from .exceptions import DataError
from .report import COMMANDS, build_report, render
from .resampling import BootstrapConfig

logger = logging.getLogger("peerstats")

EXIT_OK, EXIT_DATA, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

_HELP = {
    "validate": "count observations per quality score",
    "table1": "descriptive statistics with bootstrap mean CIs per quality score",
    "diffs": "mean differences between consecutive quality scores, with CIs and ratios",
    "correlations": "Spearman and Adler-normalized Kendall correlations with CIs",
    "counterfactual": "group means if quality followed indicator order exactly",
    "figures": "box plot summaries and a histogram stacked by quality score",
    "all": "every section above",
}


def _uint(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _level(text):
    value = float(text)
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError(f"level must lie in (0, 1), got {text}")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, metavar="PATH",
                        help="two-column (indicator, quality) text file")
    common.add_argument("--seed", type=_uint, default=0)
    common.add_argument("--replicates", type=_positive_int, default=10000)
    common.add_argument("--level", type=_level, default=0.95)
    common.add_argument("--ci-method", choices=("percentile", "bca"), default="percentile")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--bin-width", type=_positive_float, default=0.25)
    common.add_argument("--bin-origin", type=float, default=0.0)
    common.add_argument("--sd", choices=("sample", "population"), default="sample")
    common.add_argument("--workers", type=_positive_int, default=1,
                        help="threads for bootstrap replicates (output is identical)")
    common.add_argument("--column-order", default="auto",
                        choices=("auto", "indicator-quality", "quality-indicator"))

    parser = argparse.ArgumentParser(
        prog="peerstats",
        description="Compare a citation indicator with ordinal peer-review scores.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in (*COMMANDS, "all"):
        sub.add_parser(name, parents=[common], help=_HELP[name])
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("notice: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.INFO)
    try:
        d = read_dataset(args.input, column_order=args.column_order)
        cfg = BootstrapConfig(
            replicates=args.replicates,
            level=args.level,
            seed=args.seed,
            method=args.ci_method,
            workers=args.workers,
        )
        report = build_report(
            args.command, d, cfg,
            sd=args.sd, bin_width=args.bin_width, origin=args.bin_origin,
        )
        stdout.write(render(report, args.format))
    except DataError as exc:
        print(f"peerstats: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"peerstats: cannot read input: {exc}", file=stderr)
        return EXIT_DATA
    except Exception as exc:  # noqa: BLE001
        print(f"peerstats: InternalError: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL
    finally:
        logger.removeHandler(handler)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
