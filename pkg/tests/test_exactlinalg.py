"""
Tests for exact rational linear algebra.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from core.exceptions import DimensionMismatchError
from exactlinalg import (
    EchelonBasis,
    Matrix,
    Subspace,
    as_rational,
    format_rational,
    kernel,
    parse_rational,
    rank,
    rref,
    subspace_equal,
    subspace_leq,
    subspace_sum,
)

small_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda cols: st.lists(
        st.lists(
            st.fractions(min_value=-4, max_value=4, max_denominator=4),
            min_size=cols,
            max_size=cols,
        ),
        min_size=0,
        max_size=5,
    ).map(lambda rows: Matrix.from_rows(rows, cols))
)


MERSENNE_PRIME = 2 ** 61 - 1


def rank_mod(m, p=MERSENNE_PRIME):
    """Rank of ``m`` over GF(p), by plain elimination on reduced entries."""
    rows = [[x.numerator * pow(x.denominator, -1, p) % p for x in row] for row in m.row_list()]
    found = 0
    for col in range(m.cols):
        pivot = next((i for i in range(found, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[found], rows[pivot] = rows[pivot], rows[found]
        inverse = pow(rows[found][col], -1, p)
        for i in range(found + 1, len(rows)):
            factor = rows[i][col] * inverse % p
            if factor:
                rows[i] = [(a - factor * b) % p for a, b in zip(rows[i], rows[found])]
        found += 1
    return found


@pytest.mark.unit
class TestRational:
    """Tests for the rational codec."""

    def test_parse_fraction(self):
        """Test "p/q" and "p" parse to reduced Fractions."""
        assert parse_rational('6/8') == Fraction(3, 4)
        assert parse_rational('-2') == Fraction(-2)

    @pytest.mark.parametrize('text', ['0.5', '1/0', '1e3', '', 'x'])
    def test_parse_rejects(self, text):
        """Test malformed rationals are rejected."""
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_as_rational_rejects_floats_and_bools(self):
        """Test floats and booleans are never coerced."""
        with pytest.raises(TypeError):
            as_rational(0.5)
        with pytest.raises(TypeError):
            as_rational(True)

    def test_format(self):
        """Test formatting of integers and fractions."""
        assert format_rational(Fraction(-3, 6)) == '-1/2'
        assert format_rational(4) == '4'


@pytest.mark.unit
class TestMatrix:
    """Tests for rank, RREF and kernels."""

    def test_rank_of_proportional_rows(self):
        """Test rational proportional rows have rank 1."""
        m = Matrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [3, 2]])
        assert rank(m) == 1

    def test_rank_identity(self):
        """Test the identity has full rank."""
        assert rank(Matrix.identity(4)) == 4

    def test_rref(self):
        """Test RREF of an invertible matrix is the identity."""
        reduced, pivots = rref(Matrix.from_rows([[2, 4], [1, 3]]))
        assert reduced == Matrix.identity(2)
        assert pivots == (0, 1)

    def test_rref_drops_zero_rows(self):
        """Test RREF keeps one row per pivot."""
        reduced, pivots = rref(Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 0, 0]]))
        assert reduced.rows == 1
        assert pivots == (0,)
        assert reduced.row(0) == (1, 2, 3)

    def test_kernel(self):
        """Test the kernel of [1 1] is spanned by (1, -1)."""
        k = kernel(Matrix.from_rows([[1, 1]]))
        assert k.dimension == 1
        assert k.contains((1, -1))
        assert not k.contains((1, 1))

    def test_kernel_without_rows(self):
        """Test a matrix with no rows has the full kernel."""
        assert kernel(Matrix.from_rows([], 3)) == Subspace.full(3)

    def test_ragged_rows(self):
        """Test rows of different lengths are rejected."""
        with pytest.raises(DimensionMismatchError):
            Matrix.from_rows([[1, 2], [3]])

    def test_transpose_and_apply(self):
        """Test transpose and matrix-vector products."""
        m = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert m.transpose().row(0) == (1, 4)
        assert m.apply((1, 0, -1)) == (-2, -2)

    @settings(max_examples=300)
    @given(small_matrices)
    def test_rank_of_transpose(self, m):
        """Test row rank equals column rank."""
        assert rank(m) == rank(m.transpose())

    @settings(max_examples=300)
    @given(small_matrices)
    def test_rref_is_idempotent(self, m):
        """Test reducing a reduced matrix changes nothing and keeps the row space."""
        reduced, pivots = rref(m)
        assert rref(reduced) == (reduced, pivots)
        assert Subspace.span(m.cols, reduced.row_list()) == Subspace.span(m.cols, m.row_list())

    @settings(max_examples=300)
    @given(small_matrices)
    def test_rank_matches_rank_modulo_a_large_prime(self, m):
        """Test the rational rank agrees with the rank over a large prime field."""
        assert rank(m) == rank_mod(m)

    @settings(max_examples=300)
    @given(small_matrices)
    def test_rank_nullity(self, m):
        """Test rank plus nullity is the number of columns, and kernel vectors are killed."""
        k = kernel(m)
        assert rank(m) + k.dimension == m.cols
        for v in k.vectors():
            assert not any(m.apply(v))


@pytest.mark.unit
class TestSubspace:
    """Tests for RREF subspaces and the incremental echelon basis."""

    def test_membership(self):
        """Test membership and dimensions."""
        s = Subspace.span(3, [(1, 0, 0), (0, 1, 0)])
        assert s.contains((2, 3, 0))
        assert not s.contains((0, 0, 1))
        assert s.dimension == 2
        assert s.codimension == 1

    def test_coordinates_and_combination(self):
        """Test coordinates are read off at the pivot columns."""
        s = Subspace.span(3, [(1, 1, 0), (0, 1, 1)])
        assert s.vectors() == [(1, 0, -1), (0, 1, 1)]
        assert s.coordinates((2, 3, 1)) == (2, 3)
        assert s.combination((2, 3)) == (2, 3, 1)

    def test_coordinates_of_non_member(self):
        """Test coordinates of a vector outside the subspace fail."""
        with pytest.raises(ValueError):
            Subspace.span(2, [(1, 0)]).coordinates((0, 1))

    def test_equality_ignores_generators(self):
        """Test spans of different generating sets compare equal."""
        a = Subspace.span(3, [(1, 1, 0), (0, 1, 1)])
        b = Subspace.span(3, [(1, 2, 1), (1, 0, -1), (2, 2, 0)])
        assert subspace_equal(a, b)
        assert a == b

    def test_leq_and_sum(self):
        """Test inclusion and sums."""
        line = Subspace.span(3, [(1, 1, 1)])
        plane = Subspace.span(3, [(1, 0, 1), (0, 1, 0)])
        assert subspace_leq(line, plane)
        assert not subspace_leq(plane, line)
        assert subspace_sum(line, Subspace.span(3, [(0, 0, 1)])).dimension == 2
        assert subspace_sum(plane, Subspace.span(3, [(0, 0, 1)])) == Subspace.full(3)

    def test_different_ambient_dimensions(self):
        """Test subspaces of different spaces cannot be compared."""
        with pytest.raises(DimensionMismatchError):
            subspace_leq(Subspace.zero(2), Subspace.zero(3))

    def test_echelon_basis(self):
        """Test the echelon basis reports growth and fullness."""
        builder = EchelonBasis(3)
        assert builder.add((1, 2, 0))
        assert builder.add({1: 1})
        assert not builder.add((2, 5, 0))
        assert builder.dimension == 2
        assert not builder.is_full()
        assert builder.add((0, 0, 7))
        assert builder.is_full()
        assert builder.to_subspace() == Subspace.full(3)

    @settings(max_examples=300)
    @given(small_matrices)
    def test_echelon_basis_matches_rref(self, m):
        """Test the incremental basis agrees with batch RREF."""
        reduced, pivots = rref(m)
        built = Subspace.span(m.cols, m.row_list())
        assert built.pivot_cols == pivots
        assert built.basis == reduced
