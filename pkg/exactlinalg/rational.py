"""
The Rational scalar type and its text codec.

Rationals are ``fractions.Fraction`` values: always reduced, denominator
positive. Text is "p" or "p/q"; floats are never accepted.
"""
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

_RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


def parse_rational(text):
    """Parse "p" or "p/q" into a Fraction. Raises ValueError otherwise."""
    if not isinstance(text, str):
        raise TypeError(f'expected a string, got {type(text).__name__}')
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f'not a rational number: {text!r}')
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f'zero denominator in {text!r}')
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value):
    return str(as_rational(value))


def as_rational(value):
    """Coerce an int, Fraction or rational string to a Fraction."""
    if isinstance(value, bool):
        raise TypeError('booleans are not rationals')
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f'cannot use {type(value).__name__} as an exact rational')
