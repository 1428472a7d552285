"""
Subspaces of F^n kept in reduced row echelon form.

Because the RREF basis of a subspace is unique, two Subspace values are
equal exactly when they span the same space.
"""
from dataclasses import dataclass

from core.exceptions import DimensionMismatchError
from exactlinalg.matrix import ZERO, Matrix
from exactlinalg.rational import as_rational


class EchelonBasis:
    """
    Incrementally built fully reduced echelon basis with sparse rows.

    Rows are dicts ``{column: value}``; each row has a 1 at its pivot and
    0 at every other pivot, so one reduction pass decides membership.
    """

    def __init__(self, ambient_dim):
        self.ambient_dim = ambient_dim
        self._rows = {}

    def __len__(self):
        return len(self._rows)

    @property
    def dimension(self):
        return len(self._rows)

    def is_full(self):
        return len(self._rows) == self.ambient_dim

    def _sparse(self, vector):
        if isinstance(vector, dict):
            sparse = {k: as_rational(v) for k, v in vector.items() if v}
            if any(not 0 <= k < self.ambient_dim for k in sparse):
                raise DimensionMismatchError(
                    f'vector index out of range for dimension {self.ambient_dim}'
                )
            return sparse
        if len(vector) != self.ambient_dim:
            raise DimensionMismatchError(
                f'vector of length {len(vector)} in a space of dimension {self.ambient_dim}'
            )
        return {k: as_rational(v) for k, v in enumerate(vector) if v}

    def reduce(self, vector):
        """Residual of ``vector`` after removing its component along the basis."""
        residual = self._sparse(vector)
        hits = [(p, residual[p]) for p in residual if p in self._rows]
        for pivot, factor in hits:
            for column, value in self._rows[pivot].items():
                updated = residual.get(column, ZERO) - factor * value
                if updated:
                    residual[column] = updated
                else:
                    residual.pop(column, None)
        return residual

    def contains(self, vector):
        return not self.reduce(vector)

    def add(self, vector):
        """Insert ``vector``; return True when the span grew."""
        residual = self.reduce(vector)
        if not residual:
            return False
        pivot = min(residual)
        lead = residual[pivot]
        new_row = {k: v / lead for k, v in residual.items()}
        for row in self._rows.values():
            factor = row.get(pivot)
            if factor:
                for column, value in new_row.items():
                    updated = row.get(column, ZERO) - factor * value
                    if updated:
                        row[column] = updated
                    else:
                        row.pop(column, None)
        self._rows[pivot] = new_row
        return True

    def to_subspace(self):
        pivots = tuple(sorted(self._rows))
        entries = []
        for p in pivots:
            row = self._rows[p]
            entries.extend(row.get(k, ZERO) for k in range(self.ambient_dim))
        return Subspace(self.ambient_dim, Matrix(len(pivots), self.ambient_dim, tuple(entries)), pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^ambient_dim with its RREF basis and pivot columns."""

    ambient_dim: int
    basis: Matrix
    pivot_cols: tuple

    def __post_init__(self):
        if self.basis.cols != self.ambient_dim:
            raise DimensionMismatchError('basis width differs from the ambient dimension')
        if len(self.pivot_cols) != self.basis.rows:
            raise ValueError('one pivot column per basis row is required')

    @classmethod
    def span(cls, ambient_dim, vectors):
        builder = EchelonBasis(ambient_dim)
        for vector in vectors:
            builder.add(vector)
        return builder.to_subspace()

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim), ())

    @classmethod
    def full(cls, ambient_dim):
        return cls(ambient_dim, Matrix.identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dimension(self):
        return self.basis.rows

    @property
    def codimension(self):
        return self.ambient_dim - self.basis.rows

    def vectors(self):
        return self.basis.row_list()

    def _check(self, vector):
        if len(vector) != self.ambient_dim:
            raise DimensionMismatchError(
                f'vector of length {len(vector)} tested against a subspace of F^{self.ambient_dim}'
            )

    def reduce(self, vector):
        self._check(vector)
        residual = [as_rational(x) for x in vector]
        for row, p in zip(self.basis.row_list(), self.pivot_cols):
            factor = residual[p]
            if factor:
                residual = [a - factor * b if b else a for a, b in zip(residual, row)]
        return tuple(residual)

    def contains(self, vector):
        return not any(self.reduce(vector))

    def coordinates(self, vector):
        """Coefficients of ``vector`` in the basis; ValueError if it is not a member."""
        if not self.contains(vector):
            raise ValueError('vector is not in the subspace')
        return tuple(as_rational(vector[p]) for p in self.pivot_cols)

    def combination(self, coefficients):
        if len(coefficients) != self.dimension:
            raise DimensionMismatchError('one coefficient per basis vector is required')
        total = [ZERO] * self.ambient_dim
        for c, row in zip(coefficients, self.basis.row_list()):
            c = as_rational(c)
            if c:
                total = [a + c * b for a, b in zip(total, row)]
        return tuple(total)

    def complement_columns(self):
        """Non-pivot columns; the standard basis vectors there complete a basis."""
        pivots = set(self.pivot_cols)
        return tuple(k for k in range(self.ambient_dim) if k not in pivots)


def _same_ambient(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(
            f'subspaces of F^{a.ambient_dim} and F^{b.ambient_dim} cannot be compared'
        )


def subspace_contains(s, vector):
    return s.contains(vector)


def subspace_leq(a, b):
    _same_ambient(a, b)
    if a.dimension > b.dimension:
        return False
    return all(b.contains(row) for row in a.vectors())


def subspace_sum(a, b):
    _same_ambient(a, b)
    return Subspace.span(a.ambient_dim, a.vectors() + b.vectors())


def subspace_equal(a, b):
    _same_ambient(a, b)
    return a == b
