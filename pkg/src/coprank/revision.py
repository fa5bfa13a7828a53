"""Expert revision sessions: find the worst judgment, fix it, repeat.

A session wraps a matrix together with everything derived from it (ranking,
discrepancy, order-preservation status, triad scan, inconsistency index) and
keeps the full history of revisions.  The workflow mirrors how an analyst
works with an expert: the discrepancy matrix points at the judgment that
disagrees most with the ranking, the expert re-evaluates it (the suggested
consistent target is advisory only), and everything is recomputed.  Iterate
until the POP/POIP safety verdicts turn green, or as far as the expert is
willing to go.

Sessions are immutable values: apply/undo return new sessions, so histories
can be shared safely and a mutation can never leave a half-updated bundle.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .discrepancy import (CopReport, DiscrepancyMatrix, cop_safety,
                          local_discrepancy_matrix, saaty_index)
from .errors import UndoError
from .matrix import PCMatrix, TriadReport, consistency_scan
from .ranking import (DEFAULT_MAX_ITER, DEFAULT_TOL, EigenSolution,
                      RankingVector, geometric_mean_ranking, principal_eigen,
                      rescale)


@dataclass(frozen=True, eq=False)
class AnalysisBundle:
    """Everything derived from one matrix, computed atomically."""

    matrix: PCMatrix
    eigen: EigenSolution
    ranking: RankingVector
    saaty: float
    discrepancy: DiscrepancyMatrix
    cop: CopReport
    triads: TriadReport


@dataclass(frozen=True)
class RevisionStep:
    """One applied revision: judgment (i, j) changed old -> new."""

    i: int
    j: int
    old_value: float
    new_value: float
    timestamp: float


@dataclass(frozen=True, eq=False)
class RevisionSuggestion:
    """Where the next expert look should go.

    ``position`` is the argmax of the current discrepancy matrix (1-based,
    i < j); ``consistent_target`` is the value mu_i / mu_j that would zero
    this entry's discrepancy under the current ranking.  The expert is free
    to pick any other value.
    """

    position: tuple[int, int]
    current_value: float
    local_discrepancy: float
    consistent_target: float


def analyze(matrix: PCMatrix, tol: float = DEFAULT_TOL,
            max_iter: int = DEFAULT_MAX_ITER, method: str = "eigenvector") -> AnalysisBundle:
    """Compute the full derived bundle for a matrix.

    ``method`` selects the ranking used for discrepancy and COP checks; the
    eigenpair is always computed, since the inconsistency index needs the
    principal eigenvalue.
    """
    eigen = principal_eigen(matrix, tol=tol, max_iter=max_iter)
    if method == "eigenvector":
        ranking = rescale(eigen)
    elif method == "geometric_mean":
        ranking = geometric_mean_ranking(matrix)
    else:
        raise ValueError(f"unknown ranking method {method!r}")
    disc = local_discrepancy_matrix(matrix, ranking)
    return AnalysisBundle(
        matrix=matrix,
        eigen=eigen,
        ranking=ranking,
        saaty=saaty_index(eigen.lambda_max, matrix.n),
        discrepancy=disc,
        cop=cop_safety(matrix, ranking),
        triads=consistency_scan(matrix),
    )


def suggest_from_bundle(bundle: AnalysisBundle) -> RevisionSuggestion:
    """Suggestion at the discrepancy argmax of an analysis bundle.

    With zero discrepancy the argmax is the lexicographically first pair
    and the target coincides with the current value.
    """
    i, j = bundle.discrepancy.argmax
    return RevisionSuggestion(
        position=(i, j),
        current_value=bundle.matrix.entry(i, j),
        local_discrepancy=bundle.discrepancy.entry(i, j),
        consistent_target=bundle.ranking.ratio(i, j),
    )


@dataclass(frozen=True, eq=False)
class RevisionSession:
    """A matrix under revision: history of states plus the current bundle.

    ``history`` holds every matrix state, initial first; ``steps`` has one
    entry per revision (len(history) - 1).  The bundle always corresponds
    to the last matrix in history.
    """

    history: tuple[PCMatrix, ...]
    steps: tuple[RevisionStep, ...]
    bundle: AnalysisBundle
    tol: float
    max_iter: int

    @property
    def matrix(self) -> PCMatrix:
        return self.history[-1]

    def suggest(self) -> RevisionSuggestion:
        return suggest_from_bundle(self.bundle)

    def apply(self, i: int, j: int, value: float, timestamp: float | None = None) -> "RevisionSession":
        """New session with judgment (i, j) set to value and all results recomputed.

        Recomputation is full (fresh power iteration) rather than
        incremental; at the supported sizes this is instant and can never
        go stale.
        """
        old_value = self.matrix.entry(i, j)
        revised = self.matrix.set_entry(i, j, value)
        step = RevisionStep(i=i, j=j, old_value=old_value, new_value=float(value),
                            timestamp=time.time() if timestamp is None else timestamp)
        return RevisionSession(
            history=self.history + (revised,),
            steps=self.steps + (step,),
            bundle=analyze(revised, tol=self.tol, max_iter=self.max_iter),
            tol=self.tol,
            max_iter=self.max_iter,
        )

    def undo(self) -> "RevisionSession":
        """New session with the last revision rolled back."""
        if len(self.history) < 2:
            raise UndoError("nothing to undo")
        return RevisionSession(
            history=self.history[:-1],
            steps=self.steps[:-1],
            bundle=analyze(self.history[-2], tol=self.tol, max_iter=self.max_iter),
            tol=self.tol,
            max_iter=self.max_iter,
        )


def open_session(matrix: PCMatrix, tol: float = DEFAULT_TOL,
                 max_iter: int = DEFAULT_MAX_ITER) -> RevisionSession:
    """Start a revision session on a matrix, computing the initial bundle."""
    return RevisionSession(
        history=(matrix,),
        steps=(),
        bundle=analyze(matrix, tol=tol, max_iter=max_iter),
        tol=tol,
        max_iter=max_iter,
    )
