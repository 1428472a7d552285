"""
Exact linear algebra over the rationals.

Every rank, kernel and membership question of the lab is answered here,
without floating point.
"""
from exactlinalg.matrix import Matrix, kernel, rank, rref
from exactlinalg.rational import Rational, as_rational, format_rational, parse_rational
from exactlinalg.subspace import (
    EchelonBasis,
    Subspace,
    subspace_contains,
    subspace_equal,
    subspace_leq,
    subspace_sum,
)

__all__ = [
    'EchelonBasis',
    'Matrix',
    'Rational',
    'Subspace',
    'as_rational',
    'format_rational',
    'kernel',
    'parse_rational',
    'rank',
    'rref',
    'subspace_contains',
    'subspace_equal',
    'subspace_leq',
    'subspace_sum',
]
