"""Priority vectors for pairwise-comparison matrices.

The primary route is the principal eigenpair: for a positive matrix the
Perron-Frobenius theorem guarantees a unique largest real eigenvalue with a
strictly positive eigenvector, which power iteration always finds.  The
eigenvector, rescaled to sum 1, is the ranking; the eigenvalue feeds the
Saaty inconsistency index.

A row-geometric-mean ranking is included as an independent derivation
method: discrepancy and order-preservation checks are defined for any
ranking vector, not just the eigenvector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError
from .matrix import PCMatrix

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10000

RANKING_METHODS = ("eigenvector", "geometric_mean")


@dataclass(frozen=True, eq=False)
class EigenSolution:
    """Principal eigenpair plus solver diagnostics.

    ``vector`` is the converged iterate scaled to unit max-norm (all
    components strictly positive); ``residual`` is the max-norm of
    M v - lambda v measured on that vector, independently of the
    convergence test.  For a reciprocal matrix lambda_max >= n, with
    equality exactly when the matrix is consistent.
    """

    lambda_max: float
    vector: np.ndarray
    iterations: int
    residual: float

    def __post_init__(self):
        vector = np.array(self.vector, dtype=float)
        vector.setflags(write=False)
        object.__setattr__(self, "vector", vector)


@dataclass(frozen=True, eq=False)
class RankingVector:
    """Positive weights summing to 1, tagged with the method that made them."""

    weights: np.ndarray
    method: str

    def __post_init__(self):
        weights = np.array(self.weights, dtype=float)
        if weights.ndim != 1 or np.any(weights <= 0) or not np.all(np.isfinite(weights)):
            raise ValueError("weights must be a vector of positive finite numbers")
        if abs(weights.sum() - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {weights.sum()!r}")
        if self.method not in RANKING_METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    @property
    def n(self) -> int:
        return len(self.weights)

    def weight(self, i: int) -> float:
        """Weight of concept i (1-based)."""
        return float(self.weights[i - 1])

    def ratio(self, i: int, j: int) -> float:
        """Ranking-implied comparison w_i / w_j (1-based)."""
        return float(self.weights[i - 1] / self.weights[j - 1])


def principal_eigen(matrix: PCMatrix, tol: float = DEFAULT_TOL,
                    max_iter: int = DEFAULT_MAX_ITER,
                    start=None) -> EigenSolution:
    """Principal eigenpair of a PC matrix by power iteration.

    Iterates v <- M v / max(M v) from the uniform vector (``start`` exists
    for experiments; only the direction matters) until successive iterates
    differ by less than ``tol`` in max-norm and the measured residual is
    within tolerance.  The eigenvalue estimate is the component-wise mean
    of (M v) / v at convergence.

    Raises :class:`ConvergenceError` when max_iter is exhausted; positive
    matrices always converge, so that signals pathological settings.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    a = matrix.values
    n = matrix.n
    if start is None:
        v = np.ones(n)
    else:
        v = np.array(start, dtype=float)
        if v.shape != (n,) or np.any(v <= 0) or not np.all(np.isfinite(v)):
            raise ValueError("start vector must have n positive components")
        v = v / v.max()

    iterations = 0
    residual = float("inf")
    while iterations < max_iter:
        y = a @ v
        v_next = y / y.max()
        iterations += 1
        diff = float(np.max(np.abs(v_next - v)))
        v = v_next
        if diff < tol:
            y = a @ v
            lam = float(np.mean(y / v))
            residual = float(np.max(np.abs(y - lam * v)))
            if residual <= tol:
                return EigenSolution(lambda_max=lam, vector=v, iterations=iterations, residual=residual)
    raise ConvergenceError(
        f"power iteration did not converge in {iterations} iterations "
        f"(last residual {residual:g}, tol {tol:g})",
        iterations=iterations, residual=residual)


def rescale(solution: EigenSolution) -> RankingVector:
    """Eigenvector rescaled so its components sum to 1."""
    weights = solution.vector / solution.vector.sum()
    return RankingVector(weights=weights, method="eigenvector")


def eigenvector_ranking(matrix: PCMatrix, tol: float = DEFAULT_TOL,
                        max_iter: int = DEFAULT_MAX_ITER) -> RankingVector:
    """Convenience: principal_eigen followed by rescale."""
    return rescale(principal_eigen(matrix, tol=tol, max_iter=max_iter))


def geometric_mean_ranking(matrix: PCMatrix) -> RankingVector:
    """Ranking from row geometric means, rescaled to sum 1.

    Exact for consistent matrices (it recovers the generating weights), and
    a useful independent cross-check on the eigenvector elsewhere.
    """
    means = np.exp(np.mean(np.log(matrix.values), axis=1))
    return RankingVector(weights=means / means.sum(), method="geometric_mean")
