"""Inequality metrics over agent balance vectors.

Two independent routes to the same number are provided on purpose:
``gini`` is the fast sorted-rank form used by the simulation loop, and
``gini_oracle`` is the O(n^2) mean-absolute-difference form kept as a
cross-check in the test suite. They agree to ~1e-12 on integer inputs.
"""

import numpy as np


def gini(balances) -> float:
    """Gini coefficient of a vector of non-negative integer balances.

    The vector is sorted ascending and the weighted-rank form

        G = sum_i (2*i - n - 1) * x_i / (n * sum(x))      (1-based rank i)

    is evaluated with integer accumulation before the final division.
    Returns a value in [0, 1). An all-zero vector counts as perfect
    equality (every pairwise difference is zero) and returns 0.0.

    Raises ValueError on an empty vector or negative entries.
    """
    x = np.asarray(balances, dtype=np.int64)
    if x.size == 0:
        raise ValueError("gini requires a non-empty balance vector")
    if x.min() < 0:
        raise ValueError("gini requires non-negative balances")
    total = int(x.sum())
    if total == 0:
        return 0.0
    x = np.sort(x)
    n = x.size
    ranks = np.arange(1, n + 1, dtype=np.int64)
    weighted = int(np.dot(2 * ranks - n - 1, x))
    return weighted / (n * total)


def gini_oracle(balances) -> float:
    """Reference Gini: average absolute difference over all balance pairs.

    Computes sum_{i,j} |x_i - x_j| / (2 * n * sum(x)) directly, without
    sorting. Quadratic in the vector length; intended for tests, not for
    per-iteration use.
    """
    x = np.asarray(balances, dtype=np.int64)
    if x.size == 0:
        raise ValueError("gini_oracle requires a non-empty balance vector")
    if x.min() < 0:
        raise ValueError("gini_oracle requires non-negative balances")
    total = int(x.sum())
    if total == 0:
        return 0.0
    pair_diffs = int(np.abs(x[:, None] - x[None, :]).sum())
    return pair_diffs / (2 * x.size * total)
