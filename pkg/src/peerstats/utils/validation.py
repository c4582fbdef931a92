"""Input validation helpers shared by the functional API and the estimators."""

import numpy as np
from sklearn.utils.validation import column_or_1d

from ..exceptions import DegenerateInput, EmptyGroup, EmptyInput, LengthMismatch


def check_values(values, *, name="values", min_length=1, error=EmptyGroup):
    """Return ``values`` as a finite 1-d float array of at least ``min_length``."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim == 2 and 1 in arr.shape:
        arr = column_or_1d(arr)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size < min_length:
        if arr.size == 0:
            raise error(f"{name} is empty")
        raise error(f"{name} needs at least {min_length} elements, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def check_paired(x, y, *, min_length=2):
    """Validate two equally long vectors of at least ``min_length`` entries."""
    x = check_values(x, name="x", min_length=0)
    y = check_values(y, name="y", min_length=0)
    if x.size != y.size:
        raise LengthMismatch(f"x has {x.size} entries but y has {y.size}")
    if x.size < min_length:
        raise EmptyInput(f"need at least {min_length} pairs, got {x.size}")
    return x, y


def check_not_constant(x, y):
    for name, v in (("x", x), ("y", y)):
        if np.all(v == v[0]):
            raise DegenerateInput(f"{name} is constant; correlation is undefined")


def check_level(level):
    level = float(level)
    if not 0.0 < level < 1.0:
        raise ValueError(f"confidence level must lie in (0, 1), got {level}")
    return level


def check_scores(X, y):
    """Validate an (indicator, quality) sample given estimator-style.

    ``X`` is the indicator as a 1-d array or a single-column 2-d array and
    ``y`` the integer quality scores. Returns a pair of 1-d arrays.
    """
    x = check_values(X, name="X", error=EmptyInput)
    y = np.asarray(y)
    if y.ndim == 2 and 1 in y.shape:
        y = column_or_1d(y)
    if y.shape != x.shape:
        raise LengthMismatch(f"X has {x.size} samples but y has {y.size}")
    y_float = y.astype(float)
    if not np.all(np.isfinite(y_float)) or not np.all(y_float == np.round(y_float)):
        raise ValueError("quality scores y must be integers")
    return x, y_float.astype(int)
