"""
Serializers for the JSON input documents: algebra specs and generator files.
"""
from rest_framework import serializers

from core.exceptions import TracePIError
from exactlinalg.rational import as_rational, format_rational
from algebra.builders import (
    direct_sum,
    make_C2,
    make_diagonal_algebra,
    make_matrix_algebra,
    make_UT2_zero_trace,
)
from algebra.structures import TraceAlgebra
from algebra.analysis import validate_algebra
from cli.parser import parse_polynomial

SAMPLE = 'sample'


class RationalField(serializers.Field):
    """
    A rational written "p" or "p/q" (or a JSON integer).

    The string "sample" draws a nonzero rational from the ``sampler`` in
    the serializer context.
    """

    default_error_messages = {
        'invalid': 'Expected a rational "p" or "p/q", got {value!r}.',
        'no_sampler': '"sample" needs a seeded sampler.',
    }

    def to_internal_value(self, data):
        if data == SAMPLE:
            sampler = self.context.get('sampler')
            if sampler is None:
                self.fail('no_sampler')
            return sampler.nonzero()
        if isinstance(data, float):
            self.fail('invalid', value=data)
        try:
            return as_rational(data)
        except (TypeError, ValueError):
            self.fail('invalid', value=data)

    def to_representation(self, value):
        return format_rational(value)


class AlgebraSpecSerializer(serializers.Serializer):
    """Builtin descriptor ``{"kind": ...}`` or raw ``{"dim", "unit", "trace", "mult"}``."""

    KINDS = ['Mn', 'Dn', 'C2', 'UT2', 'direct_sum']

    kind = serializers.ChoiceField(choices=KINDS, required=False)
    name = serializers.CharField(required=False)
    n = serializers.IntegerField(min_value=1, max_value=4, required=False)
    alpha = RationalField(required=False)
    beta = RationalField(required=False)
    alphas = serializers.ListField(child=RationalField(), min_length=1, required=False)
    summands = serializers.ListField(child=serializers.DictField(), min_length=2, required=False)
    dim = serializers.IntegerField(min_value=0, required=False)
    labels = serializers.ListField(child=serializers.CharField(), required=False)
    unit = serializers.ListField(child=RationalField(), required=False)
    trace = serializers.ListField(child=RationalField(), required=False)
    mult = serializers.ListField(
        child=serializers.ListField(child=serializers.ListField(child=RationalField())),
        required=False,
    )

    REQUIRED = {
        'Mn': ['n', 'alpha'],
        'Dn': ['alphas'],
        'C2': ['alpha', 'beta'],
        'UT2': [],
        'direct_sum': ['summands'],
        None: ['dim', 'unit', 'trace', 'mult'],
    }

    def validate(self, attrs):
        kind = attrs.get('kind')
        missing = [key for key in self.REQUIRED[kind] if key not in attrs]
        if missing:
            raise serializers.ValidationError(
                {key: f'This field is required for kind {kind or "raw"}.' for key in missing}
            )
        if kind == 'direct_sum':
            children = []
            for index, summand in enumerate(attrs['summands']):
                child = AlgebraSpecSerializer(data=summand, context=self.context)
                if not child.is_valid():
                    raise serializers.ValidationError({'summands': {index: child.errors}})
                children.append(child.validated_data)
            attrs['summands'] = children
        if kind is None and 'labels' in attrs and len(attrs['labels']) != attrs['dim']:
            raise serializers.ValidationError({'labels': f'Expected {attrs["dim"]} labels.'})
        return attrs

    def create(self, validated_data):
        return build_algebra(validated_data)


def build_algebra(spec):
    """TraceAlgebra for validated spec data; raw specs are validated against the axioms."""
    kind = spec.get('kind')
    if kind == 'Mn':
        algebra = make_matrix_algebra(spec['n'], spec['alpha'])
    elif kind == 'Dn':
        algebra = make_diagonal_algebra(spec['alphas'])
    elif kind == 'C2':
        algebra = make_C2(spec['alpha'], spec['beta'])
    elif kind == 'UT2':
        algebra = make_UT2_zero_trace()
    elif kind == 'direct_sum':
        algebra = build_algebra(spec['summands'][0])
        for summand in spec['summands'][1:]:
            algebra = direct_sum(algebra, build_algebra(summand))
    else:
        dim = spec['dim']
        labels = spec.get('labels') or [f'b{i}' for i in range(dim)]
        algebra = validate_algebra(
            TraceAlgebra(spec.get('name', 'A'), tuple(labels), spec['mult'], spec['unit'], spec['trace'])
        )
    if spec.get('name') and kind is not None:
        algebra = algebra.with_trace(algebra.trace, name=spec['name'])
    return algebra


class GeneratorEntrySerializer(serializers.Serializer):
    name = serializers.CharField()
    polynomial = serializers.CharField()

    def validate_polynomial(self, value):
        try:
            return parse_polynomial(value)
        except TracePIError as exc:
            raise serializers.ValidationError(str(exc))
