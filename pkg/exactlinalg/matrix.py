"""
Dense rational matrices and the elimination routines built on them.

Row reduction clears denominators row by row and runs fraction-free
(Bareiss) elimination on integers; Fractions only reappear when the
echelon form is normalized.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from core.exceptions import DimensionMismatchError
from exactlinalg.rational import as_rational

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Matrix:
    """A rows x cols grid of Fractions stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError('matrix dimensions must be non-negative')
        entries = tuple(as_rational(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f'{self.rows}x{self.cols} matrix needs {self.rows * self.cols} '
                f'entries, got {len(entries)}'
            )
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [tuple(row) for row in rows]
        if cols is None:
            if not rows:
                raise ValueError('cols is required for a matrix without rows')
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatchError(
                    f'row of length {len(row)} in a matrix with {cols} columns'
                )
        return cls(len(rows), cols, tuple(x for row in rows for x in row))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        start = i * self.cols
        return self.entries[start:start + self.cols]

    def row_list(self):
        return [self.row(i) for i in range(self.rows)]

    def column(self, j):
        return self.entries[j::self.cols] if self.cols else ()

    def transpose(self):
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def apply(self, vector):
        """Return M·v."""
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f'cannot apply a {self.rows}x{self.cols} matrix to a vector of length {len(vector)}'
            )
        return tuple(
            sum((a * b for a, b in zip(self.row(i), vector) if a and b), ZERO)
            for i in range(self.rows)
        )

    def is_zero(self):
        return not any(self.entries)


def _primitive_integer_rows(matrix):
    """Clear denominators, drop zero rows and merge proportional duplicates."""
    seen = set()
    rows = []
    for i in range(matrix.rows):
        row = matrix.row(i)
        if not any(row):
            continue
        scale = lcm(*(x.denominator for x in row))
        ints = [x.numerator * (scale // x.denominator) for x in row]
        content = gcd(*ints)
        lead = next(x for x in ints if x)
        if lead < 0:
            content = -content
        key = tuple(x // content for x in ints)
        if key not in seen:
            seen.add(key)
            rows.append(list(key))
    return rows


def _bareiss_echelon(rows, ncols):
    """Fraction-free forward elimination. Returns (echelon rows, pivot columns)."""
    nrows = len(rows)
    pivots = []
    r = 0
    previous = 1
    for c in range(ncols):
        if r == nrows:
            break
        swap = next((i for i in range(r, nrows) if rows[i][c]), None)
        if swap is None:
            continue
        rows[r], rows[swap] = rows[swap], rows[r]
        pivot_row = rows[r]
        pivot = pivot_row[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            lead = row[c]
            if lead:
                for j in range(c + 1, ncols):
                    row[j] = (pivot * row[j] - lead * pivot_row[j]) // previous
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (pivot * row[j]) // previous
            row[c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(matrix):
    """
    Reduced row echelon form of ``matrix``.

    Returns ``(R, pivots)`` where R keeps only the nonzero rows (one per pivot).
    """
    echelon, pivots = _bareiss_echelon(_primitive_integer_rows(matrix), matrix.cols)
    rows = []
    for row, p in zip(echelon, pivots):
        lead = row[p]
        rows.append([Fraction(x, lead) if x else ZERO for x in row])
    for i in range(len(rows) - 1, -1, -1):
        p = pivots[i]
        lower = rows[i]
        for k in range(i):
            factor = rows[k][p]
            if factor:
                rows[k] = [a - factor * b if b else a for a, b in zip(rows[k], lower)]
    return Matrix.from_rows(rows, matrix.cols), tuple(pivots)


def rank(matrix):
    rows = _primitive_integer_rows(matrix)
    logger.debug('rank of %dx%d matrix (%d distinct rows)', matrix.rows, matrix.cols, len(rows))
    _, pivots = _bareiss_echelon(rows, matrix.cols)
    return len(pivots)


def kernel(matrix):
    """Right null space {v : M·v = 0} as a Subspace of dimension ``cols``."""
    from exactlinalg.subspace import Subspace

    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    vectors = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vector = [ZERO] * matrix.cols
        vector[free] = ONE
        for i, p in enumerate(pivots):
            value = reduced.entry(i, free)
            if value:
                vector[p] = -value
        vectors.append(vector)
    return Subspace.span(matrix.cols, vectors)
