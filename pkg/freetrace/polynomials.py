"""
Multilinear trace polynomials with exact rational coefficients.

A TracePolynomial fixes its variable set; every monomial with a nonzero
coefficient uses exactly those variables. Terms are stored sorted by the
basis ordering key, so equal polynomials compare and hash equal.
"""
from dataclasses import dataclass
from fractions import Fraction

from core.exceptions import MultilinearityError
from exactlinalg.rational import as_rational
from freetrace.monomials import UNIT, TraceMonomial, canonicalize


@dataclass(frozen=True)
class TracePolynomial:
    variables: frozenset
    terms: tuple

    @classmethod
    def from_terms(cls, terms, variables=None):
        """
        Collect ``(monomial, coefficient)`` pairs (or a mapping) into a polynomial.

        Without ``variables`` the set is read off the first monomial.
        """
        pairs = terms.items() if hasattr(terms, 'items') else terms
        collected = {}
        for monomial, coefficient in pairs:
            coefficient = as_rational(coefficient)
            collected[monomial] = collected.get(monomial, Fraction(0)) + coefficient
        if variables is None:
            variables = next(iter(collected)).variables if collected else frozenset()
        variables = frozenset(variables)
        for monomial in collected:
            if monomial.variables != variables:
                raise MultilinearityError(
                    f'monomial {monomial} does not use exactly the variables {sorted(variables)}'
                )
        kept = sorted(
            ((m, c) for m, c in collected.items() if c),
            key=lambda item: item[0].sort_key(),
        )
        return cls(variables, tuple(kept))

    @classmethod
    def zero(cls, variables=()):
        return cls(frozenset(variables), ())

    @classmethod
    def from_monomial(cls, monomial, coefficient=1):
        return cls.from_terms([(monomial, coefficient)], monomial.variables)

    @classmethod
    def unit(cls, coefficient=1):
        return cls.from_terms([(UNIT, coefficient)], frozenset())

    @property
    def degree(self):
        return len(self.variables)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def monomials(self):
        return [m for m, _ in self.terms]

    def as_dict(self):
        return dict(self.terms)

    def coefficient(self, monomial):
        for m, c in self.terms:
            if m == monomial:
                return c
        return Fraction(0)

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_add(self, poly_scale(other, -1))

    def __neg__(self):
        return poly_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, TracePolynomial):
            return poly_mul(self, other)
        return poly_scale(self, other)

    def __rmul__(self, scalar):
        return poly_scale(self, scalar)

    def __str__(self):
        from freetrace.rendering import render_polynomial

        return render_polynomial(self)


def poly_add(f, g):
    if f.variables != g.variables:
        if f.is_zero():
            return g
        if g.is_zero():
            return f
        raise MultilinearityError(
            f'cannot add polynomials in {sorted(f.variables)} and {sorted(g.variables)}'
        )
    return TracePolynomial.from_terms(list(f.terms) + list(g.terms), f.variables)


def poly_scale(f, scalar):
    scalar = as_rational(scalar)
    if not scalar:
        return TracePolynomial.zero(f.variables)
    return TracePolynomial(f.variables, tuple((m, c * scalar) for m, c in f.terms))


def poly_mul_monomial(f, left=(), right=(), traces=()):
    """Return ``Tr(traces)⋯ · left · f · right``; the extra variables must be new."""
    extra = frozenset(left) | frozenset(right) | frozenset(v for t in traces for v in t)
    variables = f.variables | extra
    if len(variables) != len(f.variables) + len(extra):
        raise MultilinearityError('multiplier shares variables with the polynomial')
    return TracePolynomial.from_terms(
        ((canonicalize(list(left) + [m] + list(right), traces), c) for m, c in f.terms),
        variables,
    )


def poly_mul(f, g):
    """Product of polynomials in disjoint variable sets."""
    if f.variables & g.variables:
        raise MultilinearityError(
            f'factors share variables {sorted(f.variables & g.variables)}'
        )
    variables = f.variables | g.variables
    return TracePolynomial.from_terms(
        ((canonicalize([m1, m2]), c1 * c2) for m1, c1 in f.terms for m2, c2 in g.terms),
        variables,
    )


def poly_trace(f, right=()):
    """Return ``Tr(f · right)``. Raises EmptyTraceError on a unit term with empty ``right``."""
    variables = f.variables | frozenset(right)
    if len(variables) != len(f.variables) + len(right):
        raise MultilinearityError('trailing word shares variables with the polynomial')
    return TracePolynomial.from_terms(
        ((canonicalize((), [[m] + list(right)]), c) for m, c in f.terms),
        variables,
    )


def permute_variables(f, sigma):
    """Rename every x_i to x_σ(i)."""
    def rename(v):
        return sigma(v) if v <= sigma.n else v

    renamed = []
    for m, c in f.terms:
        word = [rename(v) for v in m.word]
        traces = [[rename(v) for v in t] for t in m.traces]
        renamed.append((canonicalize(word, traces), c))
    return TracePolynomial.from_terms(renamed, frozenset(rename(v) for v in f.variables))


def substitute(f, assignment):
    """
    Simultaneous substitution x_i ↦ assignment[i].

    Images are TraceMonomial values (the empty monomial, or None, is the
    unit). Images must use pairwise disjoint variables that are also
    disjoint from the variables left in place. A term whose substitution
    puts the unit inside a trace raises EmptyTraceError.
    """
    unknown = set(assignment) - f.variables
    if unknown:
        raise MultilinearityError(f'cannot substitute for absent variables {sorted(unknown)}')
    images = {v: (UNIT if image is None else image) for v, image in assignment.items()}
    for image in images.values():
        if not isinstance(image, TraceMonomial):
            raise TypeError(f'substitution images are trace monomials, got {type(image).__name__}')
    variables = set(f.variables - set(images))
    expected = len(variables)
    for image in images.values():
        variables |= image.variables
        expected += len(image.variables)
    if len(variables) != expected:
        raise MultilinearityError('substitution images must use disjoint variables')

    result = []
    for m, c in f.terms:
        word = [images.get(v, v) for v in m.word]
        traces = [[images.get(v, v) for v in factor] for factor in m.traces]
        result.append((canonicalize(word, traces), c))
    return TracePolynomial.from_terms(result, variables)
