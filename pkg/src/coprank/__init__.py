"""Rankings from pairwise comparisons, with order-preservation guarantees.

The package derives a priority vector from a positive reciprocal judgment
matrix via its principal eigenvector, measures how far each individual
judgment sits from the resulting ranking (local and global discrepancy),
and checks the two order-preservation postulates (POP and POIP) both
directly and through discrepancy-based sufficient conditions.  A revision
workflow walks an expert through repairing the worst judgments until the
guarantees hold.
"""

from .discrepancy import (CopReport, DiscrepancyMatrix, check_poip_direct,
                          check_pop_direct, cop_safety, cop_safety_at,
                          epsilon, global_discrepancy,
                          local_discrepancy_matrix, poip_threshold_failures,
                          pop_threshold_failures, saaty_index,
                          saaty_index_via_epsilon)
from .errors import ConvergenceError, MatrixError, UndoError
from .matrix import (MAX_N, MIN_N, RECIPROCITY_TOL, TRIAD_TOL, PCMatrix,
                     TriadReport, consistency_scan, consistent_matrix,
                     from_upper_triangle, matrix_from_payload, parse_matrix)
from .ranking import (DEFAULT_MAX_ITER, DEFAULT_TOL, EigenSolution,
                      RankingVector, eigenvector_ranking,
                      geometric_mean_ranking, principal_eigen, rescale)
from .revision import (AnalysisBundle, RevisionSession, RevisionStep,
                       RevisionSuggestion, analyze, open_session,
                       suggest_from_bundle)

__version__ = "0.1.0"

__all__ = [
    "AnalysisBundle",
    "ConvergenceError",
    "CopReport",
    "DEFAULT_MAX_ITER",
    "DEFAULT_TOL",
    "DiscrepancyMatrix",
    "EigenSolution",
    "MatrixError",
    "MAX_N",
    "MIN_N",
    "PCMatrix",
    "RECIPROCITY_TOL",
    "RankingVector",
    "RevisionSession",
    "RevisionStep",
    "RevisionSuggestion",
    "TRIAD_TOL",
    "TriadReport",
    "UndoError",
    "analyze",
    "check_poip_direct",
    "check_pop_direct",
    "consistency_scan",
    "consistent_matrix",
    "cop_safety",
    "cop_safety_at",
    "eigenvector_ranking",
    "epsilon",
    "from_upper_triangle",
    "geometric_mean_ranking",
    "global_discrepancy",
    "local_discrepancy_matrix",
    "matrix_from_payload",
    "open_session",
    "parse_matrix",
    "poip_threshold_failures",
    "pop_threshold_failures",
    "principal_eigen",
    "rescale",
    "saaty_index",
    "saaty_index_via_epsilon",
    "suggest_from_bundle",
]
