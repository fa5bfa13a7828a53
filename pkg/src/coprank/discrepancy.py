"""Per-judgment discrepancy and the conditions of order preservation.

For a judgment matrix M and a ranking mu, the accuracy determinant

    eps(i, j) = (1 / m_ij) * (mu_i / mu_j)

compares what the ranking says about a pair against what the expert said.
A perfect match gives eps = 1 everywhere; eps and its reciprocal carry the
same information (eps(i, j) * eps(j, i) = 1).  The symmetric, scale-free
form is the local discrepancy

    E(i, j) = max(eps(i, j) - 1, 1/eps(i, j) - 1)

and the global discrepancy D(M, mu) is the largest E(i, j) over all pairs:
the worst relative mismatch between any single judgment and the ranking.

D drives two sufficient safety conditions for the order-preservation
postulates (POP: m_ij > 1 implies mu_i > mu_j; POIP: m_ij > m_kl > 1
implies mu_i/mu_j > mu_k/mu_l):

* POP holds whenever every dominance entry satisfies m_ij > D + 1,
* POIP holds whenever every qualifying pair satisfies
  m_ij / m_kl > (D + 1)^2.

Both are sufficient but not necessary, so the direct checks are always
reported alongside the threshold verdicts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matrix import PCMatrix
from .ranking import RankingVector

#: |index| below this is solver noise and clamps to exactly 0.
_INDEX_CLAMP = 1e-10


@dataclass(frozen=True, eq=False)
class DiscrepancyMatrix:
    """Symmetric nonnegative matrix of local discrepancies E(i, j).

    ``global_value`` is the largest entry (the global discrepancy D) and
    ``argmax`` the 1-based pair (i, j), i < j, attaining it; ties break to
    the lexicographically smallest pair.
    """

    values: np.ndarray
    global_value: float
    argmax: tuple[int, int]

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def entry(self, i: int, j: int) -> float:
        """Local discrepancy E(i, j), 1-based."""
        return float(self.values[i - 1, j - 1])


@dataclass(frozen=True, eq=False)
class CopReport:
    """Order-preservation status for one (matrix, ranking) pair.

    ``delta`` is the global discrepancy the thresholds were computed from.
    Direct violation lists are exact; the *_safe flags come from the
    sufficient conditions (margins positive), so safe implies no direct
    violations but not conversely.  Margins are +inf when no entry or pair
    qualifies, i.e. the condition holds vacuously.
    """

    delta: float
    pop_violations: tuple[tuple[int, int], ...]
    poip_violations: tuple[tuple[int, int, int, int], ...]
    pop_safe: bool
    poip_safe: bool
    pop_threshold: float
    poip_threshold: float
    pop_margin: float
    poip_margin: float


def epsilon(matrix: PCMatrix, ranking: RankingVector, i: int, j: int) -> float:
    """Accuracy determinant eps(i, j) = (1/m_ij) * (mu_i / mu_j), 1-based."""
    return (1.0 / matrix.entry(i, j)) * ranking.ratio(i, j)


def local_discrepancy_matrix(matrix: PCMatrix, ranking: RankingVector) -> DiscrepancyMatrix:
    """Full matrix of local discrepancies with its maximum located.

    Entries are computed on the upper triangle and mirrored, so the result
    is exactly symmetric with a zero diagonal.
    """
    n = matrix.n
    values = np.zeros((n, n))
    best: tuple[int, int] | None = None
    best_value = -1.0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            eps = epsilon(matrix, ranking, i, j)
            local = max(eps - 1.0, 1.0 / eps - 1.0)
            values[i - 1, j - 1] = local
            values[j - 1, i - 1] = local
            if local > best_value:
                best_value = local
                best = (i, j)
    assert best is not None
    return DiscrepancyMatrix(values=values, global_value=float(best_value), argmax=best)


def global_discrepancy(matrix: PCMatrix, ranking: RankingVector) -> float:
    """The global discrepancy D(M, mu) alone."""
    return local_discrepancy_matrix(matrix, ranking).global_value


def saaty_index(lambda_max: float, n: int) -> float:
    """Eigenvalue-based inconsistency index (lambda_max - n) / (n - 1).

    Zero exactly for consistent matrices; tiny negatives from solver noise
    (|value| < 1e-10) clamp to 0.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    value = (lambda_max - n) / (n - 1)
    if abs(value) < _INDEX_CLAMP:
        return 0.0
    return value


def saaty_index_via_epsilon(matrix: PCMatrix, ranking: RankingVector, j: int) -> float:
    """The inconsistency index computed as a mean of accuracy determinants.

    For the eigenvector ranking, (1/(n-1)) * sum_{i != j} (eps(i, j) - 1)
    equals (lambda_max - n)/(n - 1) for *every* fixed column j; the two
    routes cross-check each other.  Rejects non-eigenvector rankings, for
    which the identity does not hold.
    """
    if ranking.method != "eigenvector":
        raise ValueError("identity holds only for the eigenvector ranking, "
                         f"got method {ranking.method!r}")
    n = matrix.n
    matrix._check_index(j)
    total = 0.0
    for i in range(1, n + 1):
        if i != j:
            total += epsilon(matrix, ranking, i, j) - 1.0
    return total / (n - 1)


def _dominances(matrix: PCMatrix) -> list[tuple[int, int, float]]:
    """All 1-based (i, j, m_ij) with m_ij > 1, in lexicographic order.

    Entries equal to 1 are ties and generate no POP/POIP obligations; the
    comparison is exact, with no tolerance band.
    """
    m = matrix.values
    out = []
    for i in range(matrix.n):
        for j in range(matrix.n):
            if m[i, j] > 1.0:
                out.append((i + 1, j + 1, float(m[i, j])))
    return out


def check_pop_direct(matrix: PCMatrix, ranking: RankingVector) -> list[tuple[int, int]]:
    """Pairs where the ranking breaks an expert dominance.

    Returns every 1-based (i, j) with m_ij > 1 but mu_i <= mu_j.
    """
    return [(i, j) for i, j, _ in _dominances(matrix)
            if ranking.weight(i) <= ranking.weight(j)]


def check_poip_direct(matrix: PCMatrix, ranking: RankingVector) -> list[tuple[int, int, int, int]]:
    """Quadruples where the ranking breaks an expert intensity ordering.

    Returns every 1-based (i, j, k, l) with m_ij > m_kl > 1 but
    mu_i/mu_j <= mu_k/mu_l, scanning all ordered pairs of dominance
    entries.
    """
    dominances = _dominances(matrix)
    violations = []
    for i, j, a in dominances:
        for k, l, b in dominances:
            if a > b and ranking.ratio(i, j) <= ranking.ratio(k, l):
                violations.append((i, j, k, l))
    return violations


def pop_threshold_failures(matrix: PCMatrix, delta: float) -> list[tuple[int, int]]:
    """Dominance entries that fail the POP safety condition at a given delta."""
    threshold = delta + 1.0
    return [(i, j) for i, j, a in _dominances(matrix) if a <= threshold]


def poip_threshold_failures(matrix: PCMatrix, delta: float) -> list[tuple[int, int, int, int]]:
    """Qualifying pairs that fail the POIP safety condition at a given delta."""
    threshold = (delta + 1.0) ** 2
    dominances = _dominances(matrix)
    return [(i, j, k, l)
            for i, j, a in dominances
            for k, l, b in dominances
            if a > b and a / b <= threshold]


def _build_report(matrix: PCMatrix, ranking: RankingVector, delta: float) -> CopReport:
    pop_threshold = delta + 1.0
    poip_threshold = (delta + 1.0) ** 2
    dominances = _dominances(matrix)

    pop_margin = min((a - pop_threshold for _, _, a in dominances), default=math.inf)
    ratios = [a / b for _, _, a in dominances for _, _, b in dominances if a > b]
    poip_margin = min((r - poip_threshold for r in ratios), default=math.inf)

    return CopReport(
        delta=delta,
        pop_violations=tuple(check_pop_direct(matrix, ranking)),
        poip_violations=tuple(check_poip_direct(matrix, ranking)),
        pop_safe=pop_margin > 0.0,
        poip_safe=poip_margin > 0.0,
        pop_threshold=pop_threshold,
        poip_threshold=poip_threshold,
        pop_margin=pop_margin,
        poip_margin=poip_margin,
    )


def cop_safety(matrix: PCMatrix, ranking: RankingVector) -> CopReport:
    """Full POP/POIP report with delta taken from the computed discrepancy."""
    delta = global_discrepancy(matrix, ranking)
    return _build_report(matrix, ranking, delta)


def cop_safety_at(matrix: PCMatrix, ranking: RankingVector, delta: float) -> CopReport:
    """What-if variant of :func:`cop_safety` at a caller-supplied delta."""
    if not math.isfinite(delta) or delta < 0:
        raise ValueError(f"delta must be a nonnegative number, got {delta}")
    return _build_report(matrix, ranking, delta)
