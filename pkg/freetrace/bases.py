"""
Ordered bases of MTₙ and PTₙ and coordinates with respect to them.

MTₙ (dimension (n+1)!) is spanned by the monomials Tr(w_1)⋯Tr(w_k)·w_0
that use each of x_1..x_n once; PTₙ (dimension n!) by those without a
free word. Both are sorted by ``TraceMonomial.sort_key``: the set of
free-word variables first, then the word, then the trace factors.
"""
import logging
from functools import lru_cache
from itertools import combinations, permutations

from core.conf import check_degree, mt_degree_cap
from core.exceptions import DimensionMismatchError, MultilinearityError
from exactlinalg.matrix import ZERO
from freetrace.monomials import TraceMonomial, rotate_cycle
from freetrace.polynomials import TracePolynomial

logger = logging.getLogger(__name__)


def _cycle_factors(domain, images):
    """Canonical trace factors of the permutation ``domain[i] ↦ images[i]``."""
    mapping = dict(zip(domain, images))
    seen = set()
    factors = []
    for start in domain:
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        current = mapping[start]
        while current != start:
            cycle.append(current)
            seen.add(current)
            current = mapping[current]
        factors.append(rotate_cycle(cycle))
    return tuple(sorted(factors))


@lru_cache(maxsize=None)
def pure_trace_monomials(variables):
    """Every pure trace monomial on the sorted tuple ``variables``, in basis order."""
    monomials = {
        TraceMonomial((), _cycle_factors(variables, images))
        for images in permutations(variables)
    }
    return tuple(sorted(monomials, key=TraceMonomial.sort_key))


@lru_cache(maxsize=None)
def _mt_basis(n):
    universe = tuple(range(1, n + 1))
    basis = []
    for k in range(n + 1):
        for word_vars in combinations(universe, k):
            rest = tuple(v for v in universe if v not in word_vars)
            pure = pure_trace_monomials(rest)
            for word in permutations(word_vars):
                basis.extend(TraceMonomial(word, p.traces) for p in pure)
    basis.sort(key=TraceMonomial.sort_key)
    logger.debug('enumerated MT_%d: %d monomials', n, len(basis))
    return tuple(basis)


def enumerate_MT_basis(n, cap=None):
    check_degree(n, mt_degree_cap() if cap is None else cap, 'MT basis')
    return _mt_basis(n)


def enumerate_PT_basis(n, cap=None):
    check_degree(n, (mt_degree_cap() + 1) if cap is None else cap, 'PT basis')
    return pure_trace_monomials(tuple(range(1, n + 1)))


@lru_cache(maxsize=None)
def _mt_index(n):
    return {m: i for i, m in enumerate(_mt_basis(n))}


def mt_index(n, cap=None):
    """Map from each MTₙ basis monomial to its position."""
    enumerate_MT_basis(n, cap)
    return _mt_index(n)


def _check_standard(f, n):
    if f.variables != frozenset(range(1, n + 1)) and not f.is_zero():
        raise MultilinearityError(f'expected a polynomial in x1..x{n}, got {sorted(f.variables)}')


def to_sparse_coordinates(f, n, cap=None):
    _check_standard(f, n)
    index = mt_index(n, cap)
    return {index[m]: c for m, c in f.terms}


def to_coordinates(f, n, cap=None):
    """Coordinate vector of ``f`` in the ordered MTₙ basis."""
    sparse = to_sparse_coordinates(f, n, cap)
    vector = [ZERO] * len(_mt_basis(n))
    for position, c in sparse.items():
        vector[position] = c
    return tuple(vector)


def from_coordinates(vector, n, cap=None):
    basis = enumerate_MT_basis(n, cap)
    if len(vector) != len(basis):
        raise DimensionMismatchError(
            f'MT_{n} has dimension {len(basis)}, got a vector of length {len(vector)}'
        )
    return TracePolynomial.from_terms(
        ((m, c) for m, c in zip(basis, vector) if c), range(1, n + 1)
    )


def split_trace_monomials(n):
    """Tr(x_I)·x_J with I ⊔ J = {1..n}, both increasing (Tr(x_∅) = 1)."""
    universe = tuple(range(1, n + 1))
    family = []
    for k in range(n + 1):
        for traced in combinations(universe, k):
            word = tuple(v for v in universe if v not in traced)
            family.append(TraceMonomial(word, (traced,) if traced else ()))
    return family


def linear_trace_monomials(n):
    """Tr(x_{i_1})⋯Tr(x_{i_k})·x_J with J increasing."""
    universe = tuple(range(1, n + 1))
    family = []
    for k in range(n + 1):
        for traced in combinations(universe, k):
            word = tuple(v for v in universe if v not in traced)
            family.append(TraceMonomial(word, tuple((v,) for v in traced)))
    return family


def two_trace_monomials(n):
    """
    x_I·Tr(x_H) and x_I·Tr(x_{j_1}⋯x_{j_{s-1}})·Tr(x_{j_s}) with I, H, J increasing.

    The second shape needs |J| = s ≥ 2.
    """
    universe = tuple(range(1, n + 1))
    family = []
    for k in range(n + 1):
        for traced in combinations(universe, k):
            word = tuple(v for v in universe if v not in traced)
            family.append(TraceMonomial(word, (traced,) if traced else ()))
            if k >= 2:
                factors = tuple(sorted((traced[:-1], traced[-1:])))
                family.append(TraceMonomial(word, factors))
    return family
