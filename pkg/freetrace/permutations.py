"""
Permutations and the trace monomials they index.

Convention: a permutation σ ∈ Sₙ gives ptr_σ, the product of Tr over the
cycles of σ⁻¹. For σ ∈ S_{n+1}, mtr_σ is ptr_σ with the cycle through
x_{n+1} rotated to end at x_{n+1} and that variable dropped, leaving the
rest of the cycle as the free word.
"""
from dataclasses import dataclass
from itertools import permutations as _permutations

from core.exceptions import MultilinearityError
from freetrace.monomials import TraceMonomial, canonicalize, rotate_cycle
from freetrace.polynomials import TracePolynomial


@dataclass(frozen=True)
class Permutation:
    """σ ∈ Sₙ stored by its images: ``images[i - 1] == σ(i)``."""

    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f'{images} is not a permutation of 1..{len(images)}')
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n, cycles):
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def inverse(self):
        inverse = [0] * self.n
        for i, image in enumerate(self.images, start=1):
            inverse[image - 1] = i
        return Permutation(tuple(inverse))

    def compose(self, other):
        """(self ∘ other)(i) = self(other(i))."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def cycles(self):
        """Cycles (fixed points included), each starting at its smallest element."""
        seen = set()
        cycles = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            current = self(start)
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self(current)
            cycles.append(tuple(cycle))
        return cycles

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))


def all_permutations(n):
    return [Permutation(p) for p in _permutations(range(1, n + 1))]


def ptr_from_permutation(sigma):
    return canonicalize((), sigma.inverse().cycles())


def _strip_last_variable(monomial, last):
    factors = list(monomial.traces)
    for index, factor in enumerate(factors):
        if last in factor:
            break
    else:
        raise MultilinearityError(f'x{last} does not occur in a trace factor of {monomial}')
    factor = factors.pop(index)
    position = factor.index(last)
    word = factor[position + 1:] + factor[:position]
    return TraceMonomial(tuple(word), tuple(factors))


def mtr_from_permutation(sigma):
    return _strip_last_variable(ptr_from_permutation(sigma), sigma.n)


def ptr_from_group_element(coefficients):
    """ptr of a group-algebra element ``{σ: coefficient}``."""
    items = list(coefficients.items())
    if not items:
        return TracePolynomial.zero()
    n = items[0][0].n
    return TracePolynomial.from_terms(
        ((ptr_from_permutation(sigma), c) for sigma, c in items), range(1, n + 1)
    )


def pt_to_mt_iso(f, n=None):
    """
    The linear isomorphism PT_{n+1} → MTₙ sending ptr_σ to mtr_σ.

    Tr(w·x_{n+1}) becomes the free word w, in particular Tr(x_{n+1}) ↦ 1.
    """
    if n is None:
        if not f.variables:
            raise MultilinearityError('a pure trace polynomial of degree at least 1 is required')
        n = len(f.variables) - 1
    expected = frozenset(range(1, n + 2))
    if f.variables != expected and not f.is_zero():
        raise MultilinearityError(f'expected a polynomial in x1..x{n + 1}')
    terms = []
    for m, c in f.terms:
        if not m.is_pure():
            raise MultilinearityError(f'{m} is not a pure trace monomial')
        terms.append((_strip_last_variable(m, n + 1), c))
    return TracePolynomial.from_terms(terms, range(1, n + 1))


def mt_to_pt_iso(f, n=None):
    """Inverse of pt_to_mt_iso: the free word w becomes Tr(w·x_{n+1})."""
    n = len(f.variables) if n is None else n
    last = n + 1
    terms = []
    for m, c in f.terms:
        factor = rotate_cycle(m.word + (last,))
        terms.append((TraceMonomial((), tuple(sorted(m.traces + (factor,)))), c))
    return TracePolynomial.from_terms(terms, range(1, n + 2))
