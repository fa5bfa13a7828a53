"""Exceptions shared across the package."""


class MatrixError(ValueError):
    """Invalid pairwise-comparison input.

    Carries the 1-based matrix coordinates of the offending entry whenever
    they are known, so parsers, the CLI and the HTTP service can point at
    exactly which judgment is broken.
    """

    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        super().__init__(message)
        self.row = row
        self.col = col


class ConvergenceError(RuntimeError):
    """Eigensolver ran out of iterations before reaching tolerance.

    Positive reciprocal matrices always converge under power iteration, so
    this normally signals pathological tol/max_iter settings.
    """

    def __init__(self, message: str, iterations: int, residual: float):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class UndoError(RuntimeError):
    """Undo requested on a session with no revisions to roll back."""
