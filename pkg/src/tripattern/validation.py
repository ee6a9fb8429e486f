"""Input validation shared by the estimator and the CLI."""

from __future__ import annotations

import numpy as np
from sklearn.utils.validation import check_array

from .bitmatrix import BinaryMatrix

__all__ = ["check_binary_matrix", "check_binary_array"]


def check_binary_array(X, *, ensure_min_samples: int = 1, ensure_min_features: int = 1) -> np.ndarray:
    """Validate ``X`` as a finite 2-d array of 0/1 values and return it as ``uint8``."""
    if isinstance(X, BinaryMatrix):
        X = X.to_array()
    arr = check_array(
        X,
        dtype=None,
        ensure_min_samples=ensure_min_samples,
        ensure_min_features=ensure_min_features,
    )
    if arr.dtype == bool:
        return arr.astype(np.uint8)
    if arr.size and not np.isin(arr, (0, 1)).all():
        bad = arr[~np.isin(arr, (0, 1))].flat[0]
        raise ValueError(f"expected a binary matrix, found entry {bad!r}")
    return arr.astype(np.uint8)


def check_binary_matrix(X, **kwargs) -> BinaryMatrix:
    """Like :func:`check_binary_array` but returns a :class:`BinaryMatrix`."""
    if isinstance(X, BinaryMatrix) and X.m and X.n:
        return X
    return BinaryMatrix.from_array(check_binary_array(X, **kwargs))
