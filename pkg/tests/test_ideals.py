"""
Tests for generator sets and the degree-n components of trace T-ideals.
"""
import pytest

from core.exceptions import DegreeCapExceededError, DimensionMismatchError, MultilinearityError
from freetrace import builtins
from freetrace.monomials import canonicalize
from freetrace.polynomials import TracePolynomial
from ideals import components
from ideals.components import (
    component_equal,
    component_leq,
    consequences_multilinear,
    ideal_contains,
    quotient_dimension,
)
from ideals.generators import GeneratorSet, NamedGenerator


@pytest.fixture
def commutator():
    return GeneratorSet.of(('f1', builtins.f1()))


@pytest.mark.unit
class TestGenerators:
    """Tests for named generators."""

    def test_variables_must_start_at_x1(self):
        """Test generators use exactly x1..xd."""
        shifted = TracePolynomial.from_terms([(canonicalize((2, 3)), 1)], {2, 3})
        with pytest.raises(MultilinearityError):
            NamedGenerator('g', shifted)

    def test_of_keeps_order(self):
        """Test positional generators come before keyword ones, in order."""
        generators = GeneratorSet.of(('f2', builtins.f2(1)), ('f1', builtins.f1()), f3=builtins.f3(1))
        assert generators.names == ['f2', 'f1', 'f3']
        assert generators.describe() == '<f2, f1, f3>'
        assert len(generators) == 3


@pytest.mark.integration
class TestConsequences:
    """Tests for consequence generation."""

    def test_commutator_degree_two(self, commutator):
        """Test the commutator spans a line in MT2."""
        component = consequences_multilinear(commutator, 2)
        assert component.dimension == 1
        assert component.quotient_dimension == 5

    def test_commutator_degree_three(self, commutator):
        """Test the degree-3 consequences of the commutator."""
        assert consequences_multilinear(commutator, 3).dimension == 9

    def test_generator_above_degree_is_skipped(self, commutator):
        """Test a generator of larger degree contributes nothing."""
        assert consequences_multilinear(commutator, 1).dimension == 0

    @pytest.mark.parametrize('n, quotient', [(2, 4), (3, 8)])
    def test_d2_zero_trace_generators(self, n, quotient):
        """Test the quotient by <f1, f2> has dimension 2^n."""
        generators = GeneratorSet.of(('f1', builtins.f1()), ('f2', builtins.f2(1)))
        component = consequences_multilinear(generators, n)
        assert quotient_dimension(component) == quotient

    def test_d2_equal_trace_generators(self):
        """Test the quotient by <f1, f3> has dimension 8 in degree 3."""
        generators = GeneratorSet.of(('f1', builtins.f1()), ('f3', builtins.f3(1)))
        assert consequences_multilinear(generators, 3).quotient_dimension == 8

    def test_d2_generic_generators(self):
        """Test the quotient by <f1, f4, f5> has dimension 12 in degree 3."""
        generators = GeneratorSet.of(
            ('f1', builtins.f1()), ('f4', builtins.f4(1, 2)), ('f5', builtins.f5(1, 2))
        )
        assert consequences_multilinear(generators, 3).quotient_dimension == 12

    def test_ut2_generators(self):
        """Test the quotient by <Tr(x1), [x1,x2][x3,x4]> in low degrees."""
        generators = GeneratorSet.of(
            ('trace', builtins.trace_of_x1()), ('product', builtins.commutator_product())
        )
        assert consequences_multilinear(generators, 1).quotient_dimension == 1
        assert consequences_multilinear(generators, 2).quotient_dimension == 2

    def test_membership(self, commutator):
        """Test membership in the commutator ideal."""
        degree_two = consequences_multilinear(commutator, 2)
        assert ideal_contains(degree_two, builtins.f1())
        assert not ideal_contains(degree_two, builtins.f2(1))
        degree_three = consequences_multilinear(commutator, 3)
        shifted = TracePolynomial.from_terms(
            [(canonicalize((1, 3, 2)), 1), (canonicalize((3, 1, 2)), -1)]
        )
        assert degree_three.contains(shifted)

    def test_membership_degree_mismatch(self, commutator):
        """Test a polynomial of another degree is rejected."""
        with pytest.raises(DimensionMismatchError):
            ideal_contains(consequences_multilinear(commutator, 2), builtins.f4(1, 2))

    def test_components_are_symmetric(self, commutator):
        """Test consequences are stable under renaming variables."""
        generators = GeneratorSet.of(('f1', builtins.f1()), ('f3', builtins.f3(2)))
        assert consequences_multilinear(generators, 3).is_symmetric()

    def test_inclusion(self, commutator):
        """Test <f1> is inside <f1, f2> and not conversely."""
        small = consequences_multilinear(commutator, 3)
        large = consequences_multilinear(
            GeneratorSet.of(('f1', builtins.f1()), ('f2', builtins.f2(1))), 3
        )
        assert component_leq(small, large)
        assert not component_leq(large, small)
        assert component_equal(small, small)

    def test_degree_cap(self, commutator):
        """Test generation above the cap raises."""
        with pytest.raises(DegreeCapExceededError):
            consequences_multilinear(commutator, 4, cap=3)

    def test_enumeration_is_memoized(self, commutator, mocker):
        """Test each generator is expanded once per degree."""
        components._generator_component.cache_clear()
        spy = mocker.spy(components, '_consequence_elements')
        consequences_multilinear(commutator, 2)
        consequences_multilinear(commutator, 2)
        assert spy.call_count == 1
