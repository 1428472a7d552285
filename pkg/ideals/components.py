"""
Degree-n components of trace T-ideals.

The component of ⟨G⟩ in MTₙ is spanned by the multilinear consequences
of the generators:

* substitutions f(m_1, ..., m_d) of disjoint monomials or the unit
  (a unit inside a trace is not allowed), and
* their multiples T·u·g·v and T·Tr(g·w)·u by monomials in the remaining
  variables, T a pure trace monomial.

The enumeration is exhaustive for the given degree and memoized per
(generator, degree).
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial

from core.conf import check_degree, ideal_degree_cap
from core.exceptions import DimensionMismatchError, EmptyTraceError
from exactlinalg.subspace import EchelonBasis, Subspace, subspace_leq, subspace_sum
from freetrace.bases import from_coordinates, pure_trace_monomials, to_coordinates, to_sparse_coordinates
from freetrace.monomials import TraceMonomial
from freetrace.permutations import Permutation
from freetrace.polynomials import permute_variables, poly_mul_monomial, poly_trace, substitute

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealComponent:
    """A subspace of MTₙ (coordinates in the ordered MTₙ basis)."""

    degree: int
    subspace: Subspace
    provenance: str = ''

    def __post_init__(self):
        if self.subspace.ambient_dim != factorial(self.degree + 1):
            raise DimensionMismatchError(
                f'MT_{self.degree} has dimension {factorial(self.degree + 1)}, '
                f'got a subspace of F^{self.subspace.ambient_dim}'
            )

    @property
    def dimension(self):
        return self.subspace.dimension

    @property
    def quotient_dimension(self):
        return self.subspace.codimension

    def polynomials(self):
        return [from_coordinates(row, self.degree, cap=self.degree) for row in self.subspace.vectors()]

    def contains(self, f):
        return ideal_contains(self, f)

    def is_symmetric(self):
        """True iff the component is stable under every adjacent transposition."""
        n = self.degree
        swaps = [
            Permutation.from_cycles(n, [(i, i + 1)]) for i in range(1, n)
        ]
        for f in self.polynomials():
            for swap in swaps:
                image = permute_variables(f, swap)
                if not self.subspace.contains(to_coordinates(image, n, cap=n)):
                    return False
        return True


def _splits(sequence, parts):
    """All ways to cut ``sequence`` into ``parts`` consecutive, possibly empty words."""
    if parts == 0:
        if not sequence:
            yield ()
        return
    size = len(sequence)
    for cuts in combinations_with_replacement(range(size + 1), parts - 1):
        bounds = (0,) + cuts + (size,)
        yield tuple(tuple(sequence[bounds[i]:bounds[i + 1]]) for i in range(parts))


def _ideal_multiples(g, rest):
    """T·u·g·v and T·Tr(g·w)·u over the variables in ``rest``."""
    for size in range(len(rest) + 1):
        for traced in combinations(rest, size):
            outer = [v for v in rest if v not in traced]
            for pure in pure_trace_monomials(traced):
                for arrangement in permutations(outer):
                    for cut in range(len(arrangement) + 1):
                        left, right = arrangement[:cut], arrangement[cut:]
                        yield poly_mul_monomial(g, left, right, pure.traces)
                        try:
                            wrapped = poly_trace(g, left)
                        except EmptyTraceError:
                            continue
                        yield poly_mul_monomial(wrapped, (), right, pure.traces)


def _consequence_elements(f, n):
    """Every substitution-and-multiple consequence of ``f`` in MTₙ (with repeats)."""
    universe = tuple(range(1, n + 1))
    f_variables = sorted(f.variables)
    d = len(f_variables)
    for k in range(n + 1):
        for used in combinations(universe, k):
            rest = tuple(v for v in universe if v not in used)
            for arrangement in permutations(used):
                for words in _splits(arrangement, d):
                    images = {v: TraceMonomial(word) for v, word in zip(f_variables, words)}
                    try:
                        image = substitute(f, images)
                    except EmptyTraceError:
                        continue
                    if image.is_zero():
                        continue
                    yield from _ideal_multiples(image, rest)


@lru_cache(maxsize=256)
def _generator_component(f, n):
    builder = EchelonBasis(factorial(n + 1))
    seen = set()
    candidates = 0
    for element in _consequence_elements(f, n):
        if element.is_zero() or element.terms in seen:
            continue
        seen.add(element.terms)
        candidates += 1
        builder.add(to_sparse_coordinates(element, n, cap=n))
        if builder.is_full():
            break
    logger.info(
        'degree %d consequences of a degree %d generator: %d distinct, span %d',
        n, f.degree, candidates, builder.dimension,
    )
    return builder.to_subspace()


def consequences_multilinear(generators, n, cap=None):
    """The degree-n component of the trace T-ideal generated by ``generators``."""
    check_degree(n, ideal_degree_cap() if cap is None else cap, 'consequence generation')
    total = Subspace.zero(factorial(n + 1))
    for generator in generators:
        if generator.degree > n:
            continue
        total = subspace_sum(total, _generator_component(generator.polynomial, n))
    return IdealComponent(n, total, f'consequences of {generators.describe()} in degree {n}')


def ideal_contains(component, f):
    if f.degree != component.degree and not f.is_zero():
        raise DimensionMismatchError(
            f'polynomial of degree {f.degree} tested against a degree {component.degree} component'
        )
    return component.subspace.contains(to_coordinates(f, component.degree, cap=component.degree))


def quotient_dimension(component):
    """dim MTₙ / component = (n+1)! - dim component."""
    return component.quotient_dimension


def component_leq(a, b):
    if a.degree != b.degree:
        raise DimensionMismatchError('components of different degrees')
    return subspace_leq(a.subspace, b.subspace)


def component_equal(a, b):
    return component_leq(a, b) and component_leq(b, a)
