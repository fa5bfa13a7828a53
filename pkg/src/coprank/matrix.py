"""Pairwise-comparison matrices: validation, construction, (de)serialization.

A pairwise-comparison (PC) matrix is a square positive matrix whose entry
(i, j) records how many times concept i is preferred over concept j.  Three
structural invariants are enforced on every instance:

* all entries are strictly positive,
* the diagonal is exactly 1,
* reciprocity: m_ij * m_ji = 1 for every pair.

Parsers accept nearly-reciprocal input (judgments typed with a finite number
of digits) within ``RECIPROCITY_TOL`` and canonicalize it, overwriting the
lower triangle with exact float reciprocals of the upper triangle, so all
downstream math sees exact reciprocity.

All indices in the public API are 1-based, matching the convention of the
decision-analysis literature; the NumPy array underneath is ordinary 0-based
storage.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import MatrixError

#: Largest accepted |m_ij * m_ji - 1| before input is rejected as
#: non-reciprocal.  1e-5 admits judgments entered with six significant
#: digits (e.g. 0.105263 for 1/9.5) while still catching genuinely
#: asymmetric input.
RECIPROCITY_TOL = 1e-5

#: Largest |triad product - 1| for a matrix to be declared consistent.
TRIAD_TOL = 1e-9

#: Supported dimensions.  The method targets expert judgments; 64 concepts
#: is already far beyond a realistic elicitation session and keeps the
#: O(n^3) triad scan trivial.
MIN_N = 2
MAX_N = 64

# Tolerance for the reciprocity sanity check on already-canonical values
# (direct construction).  Canonical pairs v, 1/v multiply to 1 within a few
# ulp; anything worse means the caller skipped a parser.
_CANONICAL_TOL = 1e-9


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"c{i}" for i in range(1, n + 1))


@dataclass(frozen=True, eq=False)
class PCMatrix:
    """Immutable n-by-n positive reciprocal judgment matrix with labels.

    Instances are safe to share across threads; every operation returns a
    new matrix.  Build instances with :func:`parse_matrix`,
    :func:`from_upper_triangle` or :func:`consistent_matrix` rather than
    passing raw arrays, unless the array is already exactly reciprocal.
    """

    values: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise MatrixError(f"expected a square matrix, got shape {values.shape}")
        n = values.shape[0]
        if not MIN_N <= n <= MAX_N:
            raise MatrixError(f"dimension {n} outside supported range [{MIN_N}, {MAX_N}]")
        labels = tuple(str(x) for x in self.labels)
        if len(labels) != n:
            raise MatrixError(f"{len(labels)} labels for a {n}x{n} matrix")
        _validate_grid(values, tol=_CANONICAL_TOL)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def entry(self, i: int, j: int) -> float:
        """Judgment m_ij, with 1-based i, j."""
        self._check_index(i)
        self._check_index(j)
        return float(self.values[i - 1, j - 1])

    def set_entry(self, i: int, j: int, value: float) -> "PCMatrix":
        """New matrix with m_ij = value and m_ji = 1/value.

        The diagonal is immutable and value must be positive; everything
        else is left untouched.
        """
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise MatrixError("diagonal entries are fixed at 1", row=i, col=j)
        value = float(value)
        if not math.isfinite(value) or value <= 0:
            raise MatrixError(f"judgment must be a positive number, got {value}", row=i, col=j)
        grid = np.array(self.values)
        grid[i - 1, j - 1] = value
        grid[j - 1, i - 1] = 1.0 / value
        return PCMatrix(grid, self.labels)

    def to_json(self) -> str:
        """Canonical JSON interchange form, full float precision."""
        return json.dumps({"labels": list(self.labels), "matrix": [list(row) for row in self.values.tolist()]})

    def to_csv(self) -> str:
        """CSV with a label header row; floats keep full precision."""
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(self.labels)
        for row in self.values.tolist():
            writer.writerow([repr(x) for x in row])
        return out.getvalue()

    def _check_index(self, i: int) -> None:
        if not isinstance(i, (int, np.integer)) or isinstance(i, bool):
            raise MatrixError(f"index must be an integer, got {i!r}")
        if not 1 <= i <= self.n:
            raise MatrixError(f"index {i} outside 1..{self.n}")

    def __eq__(self, other):
        if not isinstance(other, PCMatrix):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.labels, self.values.tobytes()))

    def __repr__(self):
        return f"PCMatrix(n={self.n}, labels={list(self.labels)})"


@dataclass(frozen=True)
class TriadReport:
    """Outcome of the exhaustive consistency scan.

    worst_triad is the 1-based (i, j, k) whose product m_ij * m_jk * m_ki
    deviates most from 1, oriented so the product is >= 1; it is None for
    n = 2, where no triads exist.
    """

    worst_triad: tuple[int, int, int] | None
    worst_product: float
    is_consistent: bool


def _validate_grid(grid: np.ndarray, tol: float) -> None:
    """Shared invariant checks; raises MatrixError with 1-based coordinates."""
    n = grid.shape[0]
    for i in range(n):
        for j in range(n):
            v = grid[i, j]
            if not math.isfinite(v) or v <= 0:
                raise MatrixError(f"entry ({i + 1},{j + 1}) must be a positive number, got {v}",
                                  row=i + 1, col=j + 1)
    for i in range(n):
        if grid[i, i] != 1.0:
            raise MatrixError(f"diagonal entry ({i + 1},{i + 1}) must equal 1, got {grid[i, i]}",
                              row=i + 1, col=i + 1)
    for i in range(n):
        for j in range(i + 1, n):
            prod = grid[i, j] * grid[j, i]
            if abs(prod - 1.0) > tol:
                raise MatrixError(
                    f"reciprocity violated at ({j + 1},{i + 1}): "
                    f"{grid[i, j]!r} * {grid[j, i]!r} = {prod!r}",
                    row=j + 1, col=i + 1)


def _canonicalize(grid: np.ndarray) -> np.ndarray:
    """Overwrite the lower triangle with exact reciprocals of the upper."""
    out = np.array(grid, dtype=float)
    n = out.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            out[j, i] = 1.0 / out[i, j]
    return out


def _parse_number(token: str) -> float:
    """Parse a decimal or a fraction like '1/3' (evaluated as a division)."""
    token = token.strip()
    if "/" in token:
        num_s, _, den_s = token.partition("/")
        num, den = float(num_s), float(den_s)
        if den == 0:
            raise ValueError("zero denominator")
        value = num / den
    else:
        value = float(token)
    if not math.isfinite(value):
        raise ValueError("not finite")
    return value


def _grid_from_rows(rows: list[list[float]], labels: list[str] | None) -> PCMatrix:
    n_rows = len(rows)
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise MatrixError(f"ragged grid: row widths {sorted(widths)}")
    n_cols = widths.pop()
    if n_rows != n_cols:
        raise MatrixError(f"expected a square grid, got {n_rows} rows x {n_cols} columns")
    if not MIN_N <= n_rows <= MAX_N:
        raise MatrixError(f"dimension {n_rows} outside supported range [{MIN_N}, {MAX_N}]")
    if labels is not None and len(labels) != n_rows:
        raise MatrixError(f"{len(labels)} labels for a {n_rows}x{n_rows} matrix")
    grid = np.array(rows, dtype=float)
    _validate_grid(grid, tol=RECIPROCITY_TOL)
    grid = _canonicalize(grid)
    return PCMatrix(grid, tuple(labels) if labels else _default_labels(n_rows))


def parse_matrix(text: str, fmt: str = "csv") -> PCMatrix:
    """Parse a PC matrix from CSV or JSON text.

    CSV: comma-separated numeric grid, optional label header row, fractions
    like ``1/3`` accepted and evaluated exactly as a division.
    JSON: object ``{"labels": [...], "matrix": [[...], ...]}`` with numeric
    entries; labels optional.

    Labels default to c1..cn when absent.  Raises :class:`MatrixError` with
    1-based coordinates for non-square grids, non-positive entries,
    diagonals differing from 1, and reciprocity violations beyond
    ``RECIPROCITY_TOL``.
    """
    if fmt == "csv":
        return _parse_csv(text)
    if fmt == "json":
        return _parse_json(text)
    raise MatrixError(f"unknown format {fmt!r}, expected 'csv' or 'json'")


def _parse_csv(text: str) -> PCMatrix:
    raw = [row for row in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in row)]
    if not raw:
        raise MatrixError("empty input")

    def _is_numeric_row(row: list[str]) -> bool:
        try:
            for cell in row:
                _parse_number(cell)
        except ValueError:
            return False
        return True

    labels: list[str] | None = None
    if not _is_numeric_row(raw[0]):
        labels = [cell.strip() for cell in raw[0]]
        raw = raw[1:]
        if not raw:
            raise MatrixError("label row with no data rows")

    rows: list[list[float]] = []
    for i, row in enumerate(raw, start=1):
        parsed = []
        for j, cell in enumerate(row, start=1):
            try:
                parsed.append(_parse_number(cell))
            except ValueError:
                raise MatrixError(f"cannot parse entry ({i},{j}): {cell.strip()!r}", row=i, col=j) from None
        rows.append(parsed)
    return _grid_from_rows(rows, labels)


def _parse_json(text: str) -> PCMatrix:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixError(f"invalid JSON: {exc}") from None
    return matrix_from_payload(payload)


def matrix_from_payload(payload: object) -> PCMatrix:
    """Build a PCMatrix from a decoded JSON object (the interchange form)."""
    if not isinstance(payload, dict) or "matrix" not in payload:
        raise MatrixError('expected an object with a "matrix" field')
    grid = payload["matrix"]
    if not isinstance(grid, list) or not all(isinstance(r, list) for r in grid):
        raise MatrixError('"matrix" must be an array of arrays')
    rows: list[list[float]] = []
    for i, row in enumerate(grid, start=1):
        parsed = []
        for j, cell in enumerate(row, start=1):
            if isinstance(cell, bool) or not isinstance(cell, (int, float)):
                raise MatrixError(f"entry ({i},{j}) must be a number, got {cell!r}", row=i, col=j)
            parsed.append(float(cell))
        rows.append(parsed)
    labels = payload.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise MatrixError('"labels" must be an array of strings')
    return _grid_from_rows(rows, labels)


def from_upper_triangle(n: int, upper: dict[tuple[int, int], float] | list[tuple[int, int, float]],
                        labels: list[str] | None = None) -> PCMatrix:
    """Build a PC matrix from its upper triangle alone.

    ``upper`` maps 1-based pairs (i, j) with i < j to positive judgments,
    either as a dict or as (i, j, value) triples.  Reciprocity makes the
    lower triangle redundant: m_ji is stored as exactly 1/m_ij.  All
    n(n-1)/2 pairs must be covered exactly once.
    """
    if not MIN_N <= n <= MAX_N:
        raise MatrixError(f"dimension {n} outside supported range [{MIN_N}, {MAX_N}]")
    items = list(upper.items()) if isinstance(upper, dict) else [((i, j), v) for i, j, v in upper]
    grid = np.eye(n)
    seen: set[tuple[int, int]] = set()
    for (i, j), value in items:
        if not (1 <= i < j <= n):
            raise MatrixError(f"pair ({i},{j}) is not an upper-triangle pair of a {n}x{n} matrix",
                              row=i, col=j)
        if (i, j) in seen:
            raise MatrixError(f"duplicate pair ({i},{j})", row=i, col=j)
        value = float(value)
        if not math.isfinite(value) or value <= 0:
            raise MatrixError(f"judgment at ({i},{j}) must be a positive number, got {value}",
                              row=i, col=j)
        seen.add((i, j))
        grid[i - 1, j - 1] = value
        grid[j - 1, i - 1] = 1.0 / value
    if len(seen) != n * (n - 1) // 2:
        missing = next((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if (i, j) not in seen)
        raise MatrixError(f"missing pair {missing}", row=missing[0], col=missing[1])
    return PCMatrix(grid, tuple(labels) if labels else _default_labels(n))


def consistent_matrix(weights, labels: list[str] | None = None) -> PCMatrix:
    """Fully consistent matrix m_ij = w_i / w_j from a positive weight vector."""
    w = np.array(weights, dtype=float)
    if w.ndim != 1 or not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise MatrixError("weights must be a vector of positive numbers")
    n = len(w)
    if not MIN_N <= n <= MAX_N:
        raise MatrixError(f"dimension {n} outside supported range [{MIN_N}, {MAX_N}]")
    grid = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            grid[i, j] = w[i] / w[j]
            grid[j, i] = 1.0 / grid[i, j]
    return PCMatrix(grid, tuple(labels) if labels else _default_labels(n))


def consistency_scan(matrix: PCMatrix) -> TriadReport:
    """Exhaustive scan of all C(n,3) triads for the worst product.

    Each unordered triple {i, j, k} is checked in both cyclic orientations
    (products T and 1/T); the report keeps the orientation whose product
    deviates most from 1.  A 2x2 matrix has no triads and is consistent by
    definition.
    """
    m = matrix.values
    worst_triad: tuple[int, int, int] | None = None
    worst_product = 1.0
    worst_dev = -1.0
    for i, j, k in combinations(range(matrix.n), 3):
        t = m[i, j] * m[j, k] * m[k, i]
        for product, triad in ((t, (i + 1, j + 1, k + 1)), (1.0 / t, (i + 1, k + 1, j + 1))):
            dev = abs(product - 1.0)
            if dev > worst_dev:
                worst_dev = dev
                worst_product = float(product)
                worst_triad = triad
    is_consistent = worst_triad is None or abs(worst_product - 1.0) <= TRIAD_TOL
    return TriadReport(worst_triad=worst_triad, worst_product=worst_product, is_consistent=is_consistent)
