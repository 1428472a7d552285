"""
Tests for the polynomial parser, the input serializers and the tracepi command.
"""
import json
from fractions import Fraction
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError
from rest_framework import serializers

from core.exceptions import (
    DimensionMismatchError,
    EmptyTraceError,
    ExpressionSyntaxError,
    InvalidAlgebraError,
    MultilinearityError,
)
from core.sampling import ParameterSampler
from algebra.builders import make_diagonal_algebra
from freetrace import builtins
from freetrace.bases import enumerate_MT_basis
from freetrace.polynomials import TracePolynomial
from evalcodim.codimension import codim_sequence
from cli.loaders import load_algebra, load_generators, load_map
from cli.parser import parse_polynomial, tokenize
from cli.serializers import AlgebraSpecSerializer, GeneratorEntrySerializer


def run(*args):
    """Run ``tracepi`` and return the parsed JSON document."""
    out = StringIO()
    call_command('tracepi', *args, stdout=out)
    return json.loads(out.getvalue())


def exit_code(*args):
    with pytest.raises(CommandError) as excinfo:
        call_command('tracepi', *args, stdout=StringIO())
    return excinfo.value.returncode


@pytest.mark.unit
class TestParser:
    """Tests for parsing trace polynomials."""

    def test_tokens(self):
        """Test the token stream of a small polynomial."""
        kinds = [kind for kind, _, _ in tokenize('3/2 Tr(x1) x2')]
        assert kinds == ['int', 'sym', 'int', 'tr', 'sym', 'var', 'sym', 'var', 'end']

    def test_canonical_order(self):
        """Test terms come out in basis order."""
        assert str(parse_polynomial('x2 x1 - x1 x2')) == '-x1 x2 + x2 x1'

    def test_trace_rotation(self):
        """Test trace factors are read up to rotation."""
        assert parse_polynomial('Tr(x2 x1)') == parse_polynomial('Tr(x1 x2)')

    def test_cancellation(self):
        """Test equal monomials are collected."""
        f = parse_polynomial('1/2 Tr(x1) x2 - 1/2 x2 Tr(x1)')
        assert f.is_zero()
        assert str(f) == '0'

    def test_zero(self):
        """Test "0" is the zero polynomial."""
        assert parse_polynomial('0').is_zero()

    @pytest.mark.parametrize('text, expected', [
        ('x1 x2 + 0', 'x1 x2'),
        ('0 x1 + x2', 'x2'),
        ('Tr(x1 x2) - 0 x3', 'Tr(x1 x2)'),
    ])
    def test_zero_terms_are_dropped(self, text, expected):
        """Test terms with a zero coefficient do not take part in the variable check."""
        f = parse_polynomial(text)
        assert str(f) == expected
        assert f == parse_polynomial(expected)

    def test_builtin_text(self):
        """Test the written forms of the builtins."""
        assert parse_polynomial('x1 x2 - x2 x1') == builtins.f1()
        assert parse_polynomial('Tr(x1)Tr(x2) - 3/2 Tr(x1 x2)') == builtins.f2(Fraction(3, 2))

    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_basis_round_trip(self, n):
        """Test every MTn basis monomial parses back from its text."""
        for m in enumerate_MT_basis(n):
            assert parse_polynomial(str(m)) == TracePolynomial.from_monomial(m)

    def test_unexpected_character(self):
        """Test the offset of an unknown character is reported."""
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            parse_polynomial('x1 $')
        assert excinfo.value.position == 3

    @pytest.mark.parametrize('text', ['1/0 x1', 'x1 x2)', 'x0', '+', 'x1 + ', 'Tr(x1'])
    def test_syntax_errors(self, text):
        """Test malformed text is rejected."""
        with pytest.raises(ExpressionSyntaxError):
            parse_polynomial(text)

    def test_empty_trace(self):
        """Test Tr() is rejected."""
        with pytest.raises(EmptyTraceError):
            parse_polynomial('Tr() x1')

    @pytest.mark.parametrize('text', ['x1 x1', 'Tr(x1) x1', 'x1 + x2', 'x1 x2 - x1'])
    def test_not_multilinear(self, text):
        """Test repeated or unequal variable sets are rejected."""
        with pytest.raises(MultilinearityError):
            parse_polynomial(text)


@pytest.mark.unit
class TestSerializers:
    """Tests for algebra specs and generator entries."""

    def test_sampled_parameter(self, sampler):
        """Test "sample" draws a nonzero rational."""
        serializer = AlgebraSpecSerializer(
            data={'kind': 'C2', 'alpha': 'sample', 'beta': '1'}, context={'sampler': sampler}
        )
        assert serializer.is_valid(), serializer.errors
        assert serializer.validated_data['alpha'] != 0
        assert serializer.validated_data['beta'] == 1

    def test_sample_needs_sampler(self):
        """Test "sample" without a sampler is a validation error."""
        serializer = AlgebraSpecSerializer(data={'kind': 'C2', 'alpha': 'sample', 'beta': '1'})
        assert not serializer.is_valid()
        assert 'alpha' in serializer.errors

    def test_float_rejected(self):
        """Test floats are not rationals."""
        serializer = AlgebraSpecSerializer(data={'kind': 'C2', 'alpha': 1.5, 'beta': '1'})
        assert not serializer.is_valid()
        assert 'alpha' in serializer.errors

    def test_missing_kind_field(self):
        """Test the fields required by a kind."""
        serializer = AlgebraSpecSerializer(data={'kind': 'Dn'})
        assert not serializer.is_valid()
        assert 'alphas' in serializer.errors

    def test_labels_length(self):
        """Test raw specs need one label per basis element."""
        data = {
            'dim': 1, 'labels': ['a', 'b'], 'unit': ['1'], 'trace': ['1'], 'mult': [[['1']]],
        }
        serializer = AlgebraSpecSerializer(data=data)
        assert not serializer.is_valid()
        assert 'labels' in serializer.errors

    def test_direct_sum(self):
        """Test a direct sum of two one-dimensional algebras behaves like D2."""
        data = {
            'kind': 'direct_sum',
            'summands': [{'kind': 'Dn', 'alphas': ['1']}, {'kind': 'Dn', 'alphas': ['2']}],
        }
        serializer = AlgebraSpecSerializer(data=data)
        assert serializer.is_valid(), serializer.errors
        algebra = serializer.save()
        assert algebra.dim == 2
        assert codim_sequence(algebra, 3) == codim_sequence(make_diagonal_algebra([1, 2]), 3)

    def test_invalid_summand(self):
        """Test summands are validated recursively."""
        data = {'kind': 'direct_sum', 'summands': [{'kind': 'Dn'}, {'kind': 'UT2'}]}
        serializer = AlgebraSpecSerializer(data=data)
        assert not serializer.is_valid()
        assert 'summands' in serializer.errors

    def test_named_builtin(self):
        """Test a name replaces the builtin one."""
        serializer = AlgebraSpecSerializer(data={'kind': 'UT2', 'name': 'upper'})
        assert serializer.is_valid(), serializer.errors
        assert serializer.save().name == 'upper'

    def test_generator_entry(self):
        """Test generator text is parsed during validation."""
        serializer = GeneratorEntrySerializer(data={'name': 'f1', 'polynomial': 'x1 x2 - x2 x1'})
        assert serializer.is_valid(), serializer.errors
        assert serializer.validated_data['polynomial'] == builtins.f1()

    def test_generator_entry_bad_text(self):
        """Test unparsable generator text is a validation error."""
        serializer = GeneratorEntrySerializer(data={'name': 'f', 'polynomial': 'x1 x1'})
        assert not serializer.is_valid()
        assert 'polynomial' in serializer.errors


@pytest.mark.unit
class TestLoaders:
    """Tests for reading shipped and inline input documents."""

    def test_raw_algebra(self, sampler):
        """Test the raw C2 spec with labels."""
        algebra = load_algebra('c2-raw.json', sampler)
        assert algebra.name == 'C2 raw'
        assert list(algebra.labels) == ['1', 'u']
        assert algebra.trace_of(algebra.basis_vector(1)) == 1

    def test_missing_file(self, sampler):
        """Test a missing spec is an invalid algebra."""
        with pytest.raises(InvalidAlgebraError):
            load_algebra('no-such-algebra.json', sampler)

    def test_axioms_checked(self, sampler):
        """Test raw specs must satisfy the algebra axioms."""
        spec = json.dumps({
            'dim': 2, 'unit': ['1', '0'], 'trace': ['1', '1'],
            'mult': [[['1', '0'], ['0', '0']], [['0', '0'], ['0', '1']]],
        })
        with pytest.raises(InvalidAlgebraError):
            load_algebra(spec, sampler)

    def test_generators_match_builtins(self):
        """Test the shipped generator files spell out the builtins."""
        generators = {g.name: g.polynomial for g in load_generators('d2-alpha-beta.json')}
        assert generators['f1'] == builtins.f1()
        assert generators['f4'] == builtins.f4(1, 2)
        assert generators['f5'] == builtins.f5(1, 2)
        generators = {g.name: g.polynomial for g in load_generators('d2-gamma-gamma.json')}
        assert generators['f3'] == builtins.f3(1)
        generators = {g.name: g.polynomial for g in load_generators('ut2.json')}
        assert generators['commutator_product'] == builtins.commutator_product()

    def test_generators_must_be_a_list(self):
        """Test an empty or non-list generator document is rejected."""
        with pytest.raises(serializers.ValidationError):
            load_generators('[]')

    def test_generator_variables(self):
        """Test generators must use x1..xd."""
        with pytest.raises(serializers.ValidationError):
            load_generators('[{"name": "g", "polynomial": "x2 x3"}]')

    def test_map_shape(self, d2_generic, ut2):
        """Test a map needs dim(A) rows of dim(B) entries."""
        with pytest.raises(DimensionMismatchError):
            load_map('swap2.json', d2_generic, ut2)


@pytest.mark.integration
class TestTracepiCommand:
    """Tests for the tracepi management command."""

    def test_basis(self):
        """Test MT2 in basis order."""
        document = run('basis', '--n', '2')
        assert document['dimension'] == 6
        assert document['monomials'][:2] == ['Tr(x1)Tr(x2)', 'Tr(x1 x2)']
        assert run('basis', '--n', '2', '--pure')['dimension'] == 2

    def test_canon(self):
        """Test the canonical form."""
        document = run('canon', '--poly', 'x2 x1 - x1 x2')
        assert document['canonical'] == '-x1 x2 + x2 x1'
        assert document['degree'] == 2
        assert document['terms'] == 2

    def test_eval(self):
        """Test evaluation at labels and at coordinates."""
        document = run('eval', '--algebra', 'd2-1-2.json', '--poly', 'Tr(x1) x2',
                       '--value', 'x1=e11', '--value', 'x2=e22')
        assert document['value'] == 'e22'
        document = run('eval', '--algebra', 'd2-1-2.json', '--poly', 'Tr(x1) x2',
                       '--value', 'x1=1,1', '--value', 'x2=1/2,0')
        assert document['coordinates'] == ['3/2', '0']

    def test_check(self):
        """Test an identity and a non-identity with its witness."""
        document = run('check', '--algebra', 'd2-1-2.json', '--poly', 'x1 x2 - x2 x1')
        assert document['is_identity'] is True
        assert document['witness'] is None
        document = run('check', '--algebra', 'm2-alpha.json', '--poly', 'x1 x2 - x2 x1')
        assert document['is_identity'] is False
        assert document['witness'] == {'assignment': ['e11', 'e12'], 'value': 'e12'}

    def test_codim(self):
        """Test the codimensions of D2 with t(1, 2)."""
        assert run('codim', '--algebra', 'd2-1-2.json', '--n', '4')['sequence'] == [2, 5, 12, 27]

    def test_ideal_dim(self):
        """Test the quotient of the ideal generated by f1 and f2."""
        document = run('ideal-dim', '--generators', 'd2-alpha-0.json', '--n', '3')
        assert document['quotient_dimension'] == 8
        assert document['dimension'] == 16
        assert document['generators'] == '<f1, f2>'

    def test_ideal_member(self):
        """Test membership in the ideal generated by Tr(x1) and [x1,x2][x3,x4]."""
        assert run('ideal-member', '--generators', 'ut2.json', '--poly', 'Tr(x1) x2')['member'] is True
        assert run('ideal-member', '--generators', 'ut2.json', '--poly', 'x1 x2')['member'] is False

    def test_compare(self):
        """Test isomorphic algebras have equal identities."""
        assert run('compare', '--a', 'd2-1-2.json', '--b', 'd2-2-1.json', '--n', '2')['leq'] is True
        assert run('compare', '--a', 'd2-1-0.json', '--b', 'd2-1-2.json', '--n', '2')['leq'] is False

    def test_separate(self):
        """Test Tr(x1) separates UT2 from C2 with t(0, 1)."""
        document = run('separate', '--a', 'ut2.json', '--b', 'c2-0-1.json', '--n', '1')
        assert document['witness'] == {'polynomial': 'Tr(x1)', 'assignment': ['e12'], 'value': '1'}

    def test_trace_space(self):
        """Test the traces of C2 and UT2."""
        assert run('trace-space', '--algebra', 'c2-0-1.json')['dimension'] == 2
        assert run('trace-space', '--algebra', 'ut2.json')['dimension'] == 2

    def test_radical(self):
        """Test the radical of C2 with t(alpha, 1) forces a C2 witness."""
        document = run('radical', '--algebra', 'c2-a-1.json')
        assert document['dimension'] == 1
        assert document['basis'] == ['e12']
        assert document['nilpotent'] is True
        assert document['trace_vanishes'] is False
        assert document['c2_witness']['verified'] is True
        document = run('radical', '--algebra', 'ut2.json')
        assert document['trace_vanishes'] is True
        assert document['c2_witness'] is None

    def test_degenerate(self):
        """Test degeneracy of the trace form."""
        assert run('degenerate', '--algebra', 'd2-1-2.json')['degenerate'] is False
        assert run('degenerate', '--algebra', 'c2-a-0.json')['degenerate'] is True

    def test_hom_check(self):
        """Test the swap is a trace homomorphism onto the swapped traces only."""
        assert run('hom-check', '--a', 'd2-1-2.json', '--b', 'd2-2-1.json', '--map', 'swap2.json')['is_trace_hom']
        assert not run('hom-check', '--a', 'd2-1-2.json', '--b', 'd2-1-2.json', '--map', 'swap2.json')['is_trace_hom']

    @pytest.mark.slow
    def test_verify(self):
        """Test the claim catalogue holds in low degree."""
        document = run('verify', '--n', '2', '--seed', '3')
        assert document['holds'] is True
        assert len(document['samples']) == 1

    def test_seed_echo(self, settings):
        """Test the seed is reported, falling back to the configured one."""
        assert run('basis', '--n', '1', '--seed', '5')['seed'] == 5
        settings.TRACEPI_DEFAULT_SEED = 77
        document = run('basis', '--n', '1')
        assert document['seed'] == 77
        assert document['subcommand'] == 'basis'

    def test_seed_determinism(self):
        """Test sampled parameters depend only on the seed."""
        first = run('radical', '--algebra', 'c2-a-1.json', '--seed', '9')
        second = run('radical', '--algebra', 'c2-a-1.json', '--seed', '9')
        assert first == second

    def test_pretty(self):
        """Test the human-readable rendering."""
        out = StringIO()
        call_command('tracepi', 'codim', '--algebra', 'd2-1-2.json', '--n', '3', '--pretty', stdout=out)
        text = out.getvalue()
        assert 'sequence: 2, 5, 12' in text
        assert 'subcommand: codim' in text

    def test_usage_errors(self):
        """Test parse and usage errors exit with 2."""
        assert exit_code('canon', '--poly', 'x1 $') == 2
        assert exit_code('canon', '--poly', 'Tr() x1') == 2
        assert exit_code('codim', '--n', '2') == 2
        assert exit_code('ideal-dim', '--generators', '[]', '--n', '2') == 2
        assert exit_code('eval', '--algebra', 'd2-1-2.json', '--poly', 'x1 x2', '--value', 'x1=e11') == 2

    def test_invalid_algebra(self):
        """Test invalid algebra specs exit with 3."""
        assert exit_code('codim', '--algebra', '{"kind": "Dn"}', '--n', '2') == 3
        assert exit_code('trace-space', '--algebra', 'missing.json') == 3

    def test_budget_exceeded(self):
        """Test budget and degree cap violations exit with 4."""
        assert exit_code('codim', '--algebra', 'm2-alpha.json', '--n', '3', '--budget', '10') == 4
        assert exit_code('basis', '--n', '7') == 4
