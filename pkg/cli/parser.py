"""
Recursive-descent parser for trace polynomials.

    polynomial := [sign] term { sign term }
    term       := coeff { factor } | factor { factor }
    factor     := "Tr" "(" var { var } ")" | var
    coeff      := integer [ "/" positive-integer ]
    var        := "x" positive-integer

Juxtaposition is multiplication and whitespace is insignificant. A
coefficient-only term is a multiple of the empty monomial.
"""
import re
from fractions import Fraction

from core.exceptions import EmptyTraceError, ExpressionSyntaxError, MultilinearityError
from freetrace.monomials import canonicalize
from freetrace.polynomials import TracePolynomial

_TOKEN_RE = re.compile(r'\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<tr>Tr)|(?P<sym>[()+\-/]))')


def tokenize(text):
    """``(kind, value, position)`` triples, ending with an ``end`` token."""
    tokens = []
    position = 0
    while True:
        match = _TOKEN_RE.match(text, position)
        if match is None:
            rest = text[position:]
            if rest.strip():
                offset = position + len(rest) - len(rest.lstrip())
                raise ExpressionSyntaxError(f'unexpected character {text[offset]!r}', offset)
            tokens.append(('end', None, len(text)))
            return tokens
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        position = match.end()


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect_symbol(self, symbol):
        kind, value, position = self.advance()
        if kind != 'sym' or value != symbol:
            raise ExpressionSyntaxError(f'expected {symbol!r}', position)

    def at_symbol(self, *symbols):
        kind, value, _ = self.peek()
        return kind == 'sym' and value in symbols

    def variable(self):
        kind, value, position = self.advance()
        if kind != 'var':
            raise ExpressionSyntaxError('expected a variable x1, x2, ...', position)
        index = int(value[1:])
        if index < 1:
            raise ExpressionSyntaxError('variable indices start at 1', position)
        return index

    def coefficient(self):
        _, value, _ = self.advance()
        numerator = int(value)
        if not self.at_symbol('/'):
            return Fraction(numerator)
        self.advance()
        kind, value, position = self.advance()
        if kind != 'int' or int(value) == 0:
            raise ExpressionSyntaxError('expected a positive denominator', position)
        return Fraction(numerator, int(value))

    def factor(self, word, traces):
        kind, _, position = self.peek()
        if kind == 'tr':
            self.advance()
            self.expect_symbol('(')
            if self.at_symbol(')'):
                raise EmptyTraceError(f'trace of the empty word (at position {position})')
            factor = [self.variable()]
            while self.peek()[0] == 'var':
                factor.append(self.variable())
            self.expect_symbol(')')
            traces.append(factor)
        else:
            word.append(self.variable())

    def term(self, sign):
        start = self.peek()[2]
        coefficient = Fraction(sign)
        word, traces = [], []
        if self.peek()[0] == 'int':
            coefficient *= self.coefficient()
        elif self.peek()[0] not in ('var', 'tr'):
            raise ExpressionSyntaxError('expected a term', start)
        while self.peek()[0] in ('var', 'tr'):
            self.factor(word, traces)
        try:
            monomial = canonicalize(word, traces)
        except MultilinearityError as exc:
            raise MultilinearityError(f'{exc} (in the term at position {start})') from exc
        return monomial, coefficient, start

    def polynomial(self):
        sign = 1
        if self.at_symbol('+', '-'):
            sign = -1 if self.advance()[1] == '-' else 1
        terms = [self.term(sign)]
        while self.peek()[0] != 'end':
            if not self.at_symbol('+', '-'):
                raise ExpressionSyntaxError("expected '+' or '-'", self.peek()[2])
            sign = -1 if self.advance()[1] == '-' else 1
            terms.append(self.term(sign))
        return terms


def parse_polynomial(text):
    """
    Parse ``text`` into a canonical TracePolynomial; "0" is the zero polynomial.

    Terms with a zero coefficient are dropped before the variable sets are
    compared, so "x1 x2 + 0" is the polynomial x1 x2.
    """
    terms = _Parser(text).polynomial()
    nonzero = [t for t in terms if t[1]] or terms[:1]
    variables = nonzero[0][0].variables
    for monomial, _, start in nonzero:
        if monomial.variables != variables:
            raise MultilinearityError(
                f'term at position {start} uses {sorted(monomial.variables)}, '
                f'the first nonzero term uses {sorted(variables)}'
            )
    return TracePolynomial.from_terms(((m, c) for m, c, _ in nonzero if c), variables)
