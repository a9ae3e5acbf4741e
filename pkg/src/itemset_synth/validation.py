"""Input validation shared by the estimators and the CLI."""
from __future__ import annotations

import math
import numbers

import numpy as np
from scipy import sparse

from .dataset import Dataset


def check_transactions(X, *, allow_empty_transactions: bool = True,
                       name: str | None = None) -> Dataset:
    """Coerce ``X`` to a :class:`Dataset`.

    Accepts a ``Dataset``, an iterable of iterables of item ids, or a 2-D
    binary indicator matrix (dense or scipy sparse) whose column ``j`` is
    item ``j``.
    """
    if isinstance(X, Dataset):
        d = X
    elif sparse.issparse(X):
        X = sparse.csr_matrix(X, copy=True)
        X.eliminate_zeros()
        d = Dataset([X.indices[X.indptr[r]:X.indptr[r + 1]] for r in range(X.shape[0])],
                    name=name or "")
    elif isinstance(X, np.ndarray):
        if X.ndim != 2:
            raise ValueError(f"expected a 2-D indicator matrix, got {X.ndim}-D")
        d = Dataset([np.flatnonzero(row) for row in X], name=name or "")
    else:
        d = Dataset(list(X), name=name or "")
    if len(d) == 0:
        raise ValueError("empty dataset")
    if not allow_empty_transactions and any(len(t) == 0 for t in d.transactions):
        raise ValueError("dataset contains empty transactions")
    return d


def check_minsup(minsup) -> float:
    if not isinstance(minsup, numbers.Real) or isinstance(minsup, bool):
        raise TypeError(f"minsup must be a real number, got {type(minsup).__name__}")
    minsup = float(minsup)
    if not (0.0 < minsup <= 1.0):
        raise ValueError(f"minsup out of range (0, 1]: {minsup}")
    return minsup


def absolute_support(minsup: float, n_transactions: int) -> int:
    """Count threshold for a relative minsup, rounded up."""
    # round before ceil so that e.g. 0.7 * 10 does not become 8
    return max(1, math.ceil(round(minsup * n_transactions, 9)))


def check_positive_int(value, name: str, minimum: int = 1) -> int:
    if not isinstance(value, numbers.Integral) or isinstance(value, bool):
        raise TypeError(f"{name} must be an integer")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)
