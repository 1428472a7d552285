"""
Structure-constant representation of algebras with trace, their elements
and their two-sided ideals.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from core.exceptions import DimensionMismatchError, InvalidAlgebraError, NotAnIdealError
from exactlinalg.matrix import ZERO, Matrix
from exactlinalg.rational import as_rational, format_rational
from exactlinalg.subspace import Subspace

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TraceAlgebra:
    """
    An algebra with basis b_0..b_{dim-1}: b_i·b_j = Σ_k mult[i][j][k] b_k.

    ``unit`` and ``trace`` are coordinate vectors; ``trace[i] = tr(b_i)``.
    Algebras compare by identity, never structurally.
    """

    name: str
    labels: tuple
    mult: tuple
    unit: tuple
    trace: tuple
    _products: list = field(init=False, repr=False)

    def __post_init__(self):
        dim = len(self.labels)
        labels = tuple(str(label) for label in self.labels)
        if len(set(labels)) != dim:
            raise InvalidAlgebraError(f'{self.name}: basis labels must be distinct')
        try:
            mult = tuple(
                tuple(tuple(as_rational(c) for c in self.mult[i][j]) for j in range(dim))
                for i in range(dim)
            )
            unit = tuple(as_rational(c) for c in self.unit)
            trace = tuple(as_rational(c) for c in self.trace)
        except (TypeError, ValueError, IndexError) as exc:
            raise InvalidAlgebraError(f'{self.name}: malformed structure data ({exc})') from exc
        if len(self.mult) != dim or any(len(row) != dim for row in self.mult):
            raise InvalidAlgebraError(f'{self.name}: structure constants must be {dim}x{dim}x{dim}')
        if any(len(cell) != dim for row in mult for cell in row):
            raise InvalidAlgebraError(f'{self.name}: structure constants must be {dim}x{dim}x{dim}')
        if len(unit) != dim or len(trace) != dim:
            raise InvalidAlgebraError(f'{self.name}: unit and trace need {dim} coordinates')
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, 'mult', mult)
        object.__setattr__(self, 'unit', unit)
        object.__setattr__(self, 'trace', trace)
        object.__setattr__(
            self,
            '_products',
            [[tuple((k, c) for k, c in enumerate(mult[i][j]) if c) for j in range(dim)] for i in range(dim)],
        )

    @classmethod
    def from_products(cls, name, labels, products, unit, trace):
        """Build from a sparse table ``{(i, j): {k: c}}``; missing products are 0."""
        dim = len(labels)
        mult = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), combination in products.items():
            for k, c in combination.items():
                mult[i][j][k] = as_rational(c)
        return cls(name, tuple(labels), mult, tuple(unit), tuple(trace))

    @property
    def dim(self):
        return len(self.labels)

    def __str__(self):
        return self.name

    def zero_vector(self):
        return (ZERO,) * self.dim

    def basis_vector(self, i):
        return tuple(Fraction(1) if k == i else ZERO for k in range(self.dim))

    def element(self, coords):
        return AlgebraElement(self, tuple(coords))

    def basis_element(self, i):
        return AlgebraElement(self, self.basis_vector(i))

    def unit_element(self):
        return AlgebraElement(self, self.unit)

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f'{self.name} has no basis element {label!r}') from None

    def _check(self, vector):
        if len(vector) != self.dim:
            raise DimensionMismatchError(
                f'{self.name} has dimension {self.dim}, got a vector of length {len(vector)}'
            )

    def multiply(self, x, y):
        """Product of two coordinate vectors."""
        self._check(x)
        self._check(y)
        result = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self._products[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                scale = xi * yj
                for k, c in row[j]:
                    result[k] += scale * c
        return tuple(result)

    def basis_product(self, i, j):
        result = [ZERO] * self.dim
        for k, c in self._products[i][j]:
            result[k] = c
        return tuple(result)

    def trace_of(self, x):
        self._check(x)
        return sum((a * t for a, t in zip(x, self.trace) if a and t), ZERO)

    def trace_to_unit(self, x):
        """tr(x)·1 as a coordinate vector."""
        value = self.trace_of(x)
        return tuple(value * u for u in self.unit)

    def left_multiplication(self, x):
        """Matrix whose row i holds the coordinates of x·b_i."""
        return Matrix.from_rows(
            [self.multiply(x, self.basis_vector(i)) for i in range(self.dim)], self.dim
        )

    def regular_trace(self, x):
        """Trace of the left multiplication operator L_x."""
        total = ZERO
        for i in range(self.dim):
            total += self.multiply(x, self.basis_vector(i))[i]
        return total

    def with_trace(self, trace, name=None):
        """The same ring with another trace functional."""
        return TraceAlgebra(name or self.name, self.labels, self.mult, self.unit, tuple(trace))

    def render(self, x):
        return render_vector(self.labels, x)


def render_vector(labels, x):
    terms = []
    for label, c in zip(labels, x):
        if not c:
            continue
        magnitude = abs(c)
        body = label if magnitude == 1 else f'{format_rational(magnitude)} {label}'
        if not terms:
            terms.append(f'-{body}' if c < 0 else body)
        else:
            terms.append(f' - {body}' if c < 0 else f' + {body}')
    return ''.join(terms) or '0'


@dataclass(frozen=True)
class AlgebraElement:
    algebra: TraceAlgebra
    coords: tuple

    def __post_init__(self):
        coords = tuple(as_rational(c) for c in self.coords)
        self.algebra._check(coords)
        object.__setattr__(self, 'coords', coords)

    def _same(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.algebra is not self.algebra:
            raise DimensionMismatchError('elements belong to different algebras')
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._same(other)
            return AlgebraElement(self.algebra, self.algebra.multiply(self.coords, other.coords))
        scalar = as_rational(other)
        return AlgebraElement(self.algebra, tuple(scalar * a for a in self.coords))

    def __rmul__(self, scalar):
        scalar = as_rational(scalar)
        return AlgebraElement(self.algebra, tuple(scalar * a for a in self.coords))

    def trace(self):
        return self.algebra.trace_of(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def __str__(self):
        return self.algebra.render(self.coords)


@dataclass(frozen=True)
class AlgebraIdeal:
    """A two-sided ideal of ``algebra`` given by a subspace of coordinates."""

    algebra: TraceAlgebra
    subspace: Subspace

    def __post_init__(self):
        a = self.algebra
        if self.subspace.ambient_dim != a.dim:
            raise DimensionMismatchError(
                f'subspace of F^{self.subspace.ambient_dim} is not inside {a.name} (dimension {a.dim})'
            )
        for row in self.subspace.vectors():
            for i in range(a.dim):
                b = a.basis_vector(i)
                if not self.subspace.contains(a.multiply(row, b)):
                    raise NotAnIdealError(f'subspace is not closed under right multiplication in {a.name}')
                if not self.subspace.contains(a.multiply(b, row)):
                    raise NotAnIdealError(f'subspace is not closed under left multiplication in {a.name}')

    @property
    def dimension(self):
        return self.subspace.dimension

    def is_zero(self):
        return self.subspace.dimension == 0

    def vectors(self):
        return self.subspace.vectors()
