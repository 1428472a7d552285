"""JSON and plain-text rendering of command results."""
import json
from fractions import Fraction

from django.core.serializers.json import DjangoJSONEncoder

from exactlinalg.rational import format_rational
from freetrace.monomials import TraceMonomial
from freetrace.polynomials import TracePolynomial
from algebra.structures import AlgebraElement


class TracePIJSONEncoder(DjangoJSONEncoder):
    """Rationals as "p/q" strings; polynomials and elements in their text form."""

    def default(self, o):
        if isinstance(o, Fraction):
            return format_rational(o)
        if isinstance(o, (TracePolynomial, TraceMonomial, AlgebraElement)):
            return str(o)
        if isinstance(o, (tuple, frozenset, set)):
            return list(o)
        return super().default(o)


def render_json(document):
    return json.dumps(document, cls=TracePIJSONEncoder, sort_keys=True)


def _plain(value):
    return json.loads(json.dumps(value, cls=TracePIJSONEncoder))


def render_pretty(document, indent=0):
    """Indented ``key: value`` lines for people reading a terminal."""
    lines = []
    pad = '  ' * indent
    for key in sorted(document):
        value = _plain(document[key])
        if isinstance(value, dict):
            lines.append(f'{pad}{key}:')
            lines.append(render_pretty(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f'{pad}{key}:')
            for item in value:
                lines.append(render_pretty(item, indent + 1))
                lines.append('')
        elif isinstance(value, list):
            lines.append(f'{pad}{key}: ' + ', '.join(str(v) for v in value))
        else:
            lines.append(f'{pad}{key}: {value}')
    return '\n'.join(line for line in lines if line is not None)
