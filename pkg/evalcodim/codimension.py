"""
Evaluation matrices, trace codimensions and the degree-n identities.

Row r of the evaluation matrix E is the r-th MTₙ basis monomial; the
column (t, k) holds the k-th coordinate of that monomial evaluated on the
basis tuple t. A polynomial with coefficient vector c is an identity iff
cᵀE = 0, so c_n^tr(A) = rank E and the identities are the kernel of Eᵀ.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial

from core.conf import check_budget, evaluation_budget
from exactlinalg.matrix import Matrix, kernel, rank
from freetrace.bases import enumerate_MT_basis
from ideals.components import IdealComponent
from evalcodim.evaluation import Evaluator, evaluation_row

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvaluationMatrix:
    degree: int
    algebra: object
    monomials: tuple
    columns: tuple
    matrix: Matrix


def evaluation_cost(n, a):
    return factorial(n + 1) * a.dim ** n * a.dim


def evaluation_matrix(n, a, budget=None, cap=None):
    """(n+1)! x dimⁿ·dim matrix of basis monomials evaluated on basis tuples."""
    check_budget(
        evaluation_cost(n, a),
        evaluation_budget() if budget is None else budget,
        f'evaluation matrix of {a.name} in degree {n}',
    )
    monomials = enumerate_MT_basis(n, cap)
    tuples = list(product(range(a.dim), repeat=n))
    width = len(tuples) * a.dim
    rows = [[None] * width for _ in monomials]
    for t_index, indices in enumerate(tuples):
        values = {v: a.basis_vector(i) for v, i in enumerate(indices, start=1)}
        evaluator = Evaluator(a, values)
        offset = t_index * a.dim
        for row, m in zip(rows, monomials):
            row[offset:offset + a.dim] = evaluator.monomial(m)
    columns = tuple((indices, k) for indices in tuples for k in range(a.dim))
    logger.info('evaluation matrix of %s in degree %d: %d x %d', a.name, n, len(monomials), width)
    matrix = Matrix(len(monomials), width, tuple(x for row in rows for x in row))
    return EvaluationMatrix(n, a, monomials, columns, matrix)


def trace_codimension(n, a, budget=None, cap=None):
    """c_n^tr(A) = rank of the evaluation matrix."""
    return rank(evaluation_matrix(n, a, budget, cap).matrix)


def codim_sequence(a, n_max, budget=None, cap=None):
    return [trace_codimension(n, a, budget, cap) for n in range(1, n_max + 1)]


@lru_cache(maxsize=64)
def _identities(n, a, budget, cap):
    evaluation = evaluation_matrix(n, a, budget, cap)
    subspace = kernel(evaluation.matrix.transpose())
    logger.info('%s: %d identities in degree %d', a.name, subspace.dimension, n)
    return IdealComponent(n, subspace, f'trace identities of {a.name} in degree {n}')


def identities_subspace(n, a, budget=None, cap=None):
    """MTₙ ∩ Id^tr(A) as an IdealComponent."""
    return _identities(n, a, budget, cap)


def independent_modulo_identities(polynomials, a):
    """True iff no nontrivial combination of ``polynomials`` is an identity of ``a``."""
    polynomials = list(polynomials)
    if not polynomials:
        return True
    rows = [evaluation_row(f, a) for f in polynomials]
    width = len(rows[0])
    return rank(Matrix.from_rows(rows, width)) == len(polynomials)
