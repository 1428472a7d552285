"""
Evaluating trace polynomials on an algebra with trace.

A multilinear polynomial is an identity iff it vanishes on every tuple of
basis elements, so basis tuples are all that identity tests need.
"""
import logging
from itertools import product

from core.exceptions import DimensionMismatchError, UncoveredVariableError
from algebra.structures import AlgebraElement

logger = logging.getLogger(__name__)


class Evaluator:
    """Evaluates monomials at fixed values of the variables, caching word products and traces."""

    def __init__(self, algebra, values):
        self.algebra = algebra
        self.values = values
        self._words = {(): algebra.unit}
        self._traces = {}

    def word(self, word):
        cached = self._words.get(word)
        if cached is None:
            cached = self.algebra.multiply(self.word(word[:-1]), self.values[word[-1]])
            self._words[word] = cached
        return cached

    def trace(self, factor):
        cached = self._traces.get(factor)
        if cached is None:
            cached = self.algebra.trace_of(self.word(factor))
            self._traces[factor] = cached
        return cached

    def monomial(self, m):
        scalar = 1
        for factor in m.traces:
            scalar *= self.trace(factor)
            if not scalar:
                return self.algebra.zero_vector()
        vector = self.word(m.word)
        if scalar == 1:
            return vector
        return tuple(scalar * x for x in vector)

    def polynomial(self, f):
        total = list(self.algebra.zero_vector())
        for m, c in f.terms:
            for k, x in enumerate(self.monomial(m)):
                if x:
                    total[k] += c * x
        return tuple(total)


def _values_from_assignment(f, a, assignment):
    missing = sorted(f.variables - set(assignment))
    if missing:
        raise UncoveredVariableError(
            'no value for ' + ', '.join(f'x{v}' for v in missing)
        )
    values = {}
    for v in f.variables:
        value = assignment[v]
        if isinstance(value, AlgebraElement):
            if value.algebra is not a:
                raise DimensionMismatchError(f'value of x{v} is not an element of {a.name}')
            values[v] = value.coords
        else:
            values[v] = a.element(value).coords
    return values


def evaluate(f, a, assignment):
    """f(assignment) as an element of ``a``; the assignment must cover every variable."""
    values = _values_from_assignment(f, a, assignment)
    return a.element(Evaluator(a, values).polynomial(f))


def basis_tuples(f, a):
    """Basis-index tuples for the sorted variables of ``f``, in lexicographic order."""
    return product(range(a.dim), repeat=f.degree)


def _evaluate_on_tuple(f, a, variables, indices):
    values = {v: a.basis_vector(i) for v, i in zip(variables, indices)}
    return Evaluator(a, values).polynomial(f)


def find_nonvanishing_tuple(f, a):
    """The lexicographically first basis tuple where ``f`` does not vanish, with the value."""
    variables = sorted(f.variables)
    for indices in basis_tuples(f, a):
        value = _evaluate_on_tuple(f, a, variables, indices)
        if any(value):
            return indices, a.element(value)
    return None


def is_identity(f, a):
    return find_nonvanishing_tuple(f, a) is None


def multilinear_table(f, a):
    """
    Values of ``f`` on every basis tuple.

    By multilinearity f(Σ a_i b_i, ...) is the sum of these values weighted
    by the products of coefficients, so the table is f on generic elements.
    """
    variables = sorted(f.variables)
    return {
        indices: a.element(_evaluate_on_tuple(f, a, variables, indices))
        for indices in basis_tuples(f, a)
    }


def evaluation_row(f, a):
    """Concatenated coordinates of ``f`` on all basis tuples."""
    variables = sorted(f.variables)
    row = []
    for indices in basis_tuples(f, a):
        row.extend(_evaluate_on_tuple(f, a, variables, indices))
    return tuple(row)
