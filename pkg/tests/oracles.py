"""Independent oracles the tests check the library against.

Nothing here may call into the code paths being verified: eigenvalues come
from the characteristic polynomial, scans from brute-force enumeration over
raw arrays.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np
from scipy.optimize import brentq


def cubic_lambda_max(grid: np.ndarray) -> float:
    """Dominant eigenvalue of a 3x3 matrix from its characteristic cubic.

    Coefficients come from the explicit cofactor expansion of det(M - x I):
        x^3 - tr(M) x^2 + c1 x - det(M) = 0
    where c1 is the sum of principal 2x2 minors.  The root is bracketed and
    found by Brent's method, entirely independent of any iterative
    eigensolver.
    """
    m = np.asarray(grid, dtype=float)
    assert m.shape == (3, 3)
    tr = m[0, 0] + m[1, 1] + m[2, 2]
    c1 = (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
          + m[0, 0] * m[2, 2] - m[0, 2] * m[2, 0]
          + m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
    det = (m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
           - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
           + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0]))

    def p(x):
        return x ** 3 - tr * x ** 2 + c1 * x - det

    hi = 3.0
    while p(hi) <= 0:
        hi *= 2.0
    lo = 1.0
    while p(lo) >= 0:
        lo /= 2.0
    return float(brentq(p, lo, hi, xtol=1e-14, rtol=1e-15))


def random_reciprocal_grid(rng: np.random.Generator, n: int,
                           low: float = 1 / 9, high: float = 9.0) -> np.ndarray:
    """Raw reciprocal grid, entries log-uniform in [low, high], reciprocals exact."""
    grid = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            v = float(np.exp(rng.uniform(np.log(low), np.log(high))))
            grid[i, j] = v
            grid[j, i] = 1.0 / v
    return grid


def worst_triad_brute(grid: np.ndarray) -> tuple[tuple[int, int, int] | None, float]:
    """Worst triad by scanning every ordered triple of distinct indices."""
    n = grid.shape[0]
    best = None
    best_product = 1.0
    for i, j, k in permutations(range(n), 3):
        t = grid[i, j] * grid[j, k] * grid[k, i]
        if best is None or abs(t - 1.0) > abs(best_product - 1.0):
            best = (i + 1, j + 1, k + 1)
            best_product = float(t)
    return best, best_product


def epsilon_brute(grid: np.ndarray, weights: np.ndarray, i: int, j: int) -> float:
    """Accuracy determinant straight from the definition (1-based i, j)."""
    return weights[i - 1] / (grid[i - 1, j - 1] * weights[j - 1])


def pop_violations_brute(grid: np.ndarray, weights: np.ndarray) -> set[tuple[int, int]]:
    n = grid.shape[0]
    return {(i + 1, j + 1) for i in range(n) for j in range(n)
            if grid[i, j] > 1.0 and weights[i] <= weights[j]}


def poip_violations_brute(grid: np.ndarray, weights: np.ndarray) -> set[tuple[int, int, int, int]]:
    n = grid.shape[0]
    above = [(i, j) for i in range(n) for j in range(n) if grid[i, j] > 1.0]
    out = set()
    for i, j in above:
        for k, l in above:
            if grid[i, j] > grid[k, l] and weights[i] / weights[j] <= weights[k] / weights[l]:
                out.add((i + 1, j + 1, k + 1, l + 1))
    return out
