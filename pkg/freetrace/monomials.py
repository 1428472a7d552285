"""
Multilinear trace monomials in canonical form.

A monomial is a product Tr(w_1)⋯Tr(w_k)·w_0 of a free word ``w_0`` and
central trace factors. Variables are positive integers and each appears
exactly once. Canonical form rotates every trace factor so that its
smallest variable comes first and sorts the factors.
"""
from dataclasses import dataclass

from core.exceptions import EmptyTraceError, MultilinearityError


def rotate_cycle(factor):
    """Rotate a trace factor so that its smallest variable comes first."""
    start = factor.index(min(factor))
    return tuple(factor[start:]) + tuple(factor[:start])


@dataclass(frozen=True)
class TraceMonomial:
    """A canonical multilinear trace monomial. The empty monomial is the unit."""

    word: tuple = ()
    traces: tuple = ()

    def __post_init__(self):
        word = tuple(self.word)
        traces = tuple(tuple(f) for f in self.traces)
        object.__setattr__(self, 'word', word)
        object.__setattr__(self, 'traces', traces)
        seen = set()
        for v in word + tuple(v for f in traces for v in f):
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise MultilinearityError(f'variables are positive integers, got {v!r}')
            if v in seen:
                raise MultilinearityError(f'variable x{v} occurs more than once')
            seen.add(v)
        for factor in traces:
            if not factor:
                raise EmptyTraceError('trace of the empty word')
            if factor != rotate_cycle(factor):
                raise ValueError(f'trace factor {factor} is not rotated; use canonicalize()')
        if list(traces) != sorted(traces):
            raise ValueError('trace factors are not sorted; use canonicalize()')

    @property
    def variables(self):
        return frozenset(self.word).union(*self.traces) if self.traces else frozenset(self.word)

    @property
    def degree(self):
        return len(self.word) + sum(len(f) for f in self.traces)

    def is_pure(self):
        return not self.word

    def is_unit(self):
        return not self.word and not self.traces

    def sort_key(self):
        return (tuple(sorted(self.word)), self.word, self.traces)

    def __str__(self):
        from freetrace.rendering import render_monomial

        return render_monomial(self)


UNIT = TraceMonomial()


def _flatten(items):
    """Split a raw sequence into its inlined variables and pulled-out trace factors."""
    word = []
    factors = []
    for item in items:
        if isinstance(item, TraceMonomial):
            word.extend(item.word)
            factors.extend(item.traces)
        else:
            word.append(item)
    return word, factors


def canonicalize(word=(), traces=(), variables=None):
    """
    Build the canonical monomial of ``Tr(traces[0])⋯ · word``.

    Items of ``word`` and of each raw trace factor are variable indices or
    nested TraceMonomial values. A nested monomial contributes its word in
    place and its trace factors as separate central factors, which is how
    Tr(Tr(M)·N) = Tr(M)·Tr(N) is flattened.
    """
    flat_word, factors = _flatten(word)
    for raw in traces:
        inner, nested = _flatten(raw)
        if not inner:
            raise EmptyTraceError('trace of the empty word')
        factors.extend(nested)
        factors.append(tuple(inner))
    rotated = sorted(rotate_cycle(f) for f in factors)
    monomial = TraceMonomial(tuple(flat_word), tuple(rotated))
    if variables is not None and monomial.variables != frozenset(variables):
        missing = sorted(frozenset(variables) - monomial.variables)
        extra = sorted(monomial.variables - frozenset(variables))
        raise MultilinearityError(
            f'monomial variables differ from the declared set (missing {missing}, unexpected {extra})'
        )
    return monomial
