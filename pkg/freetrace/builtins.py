"""
Trace polynomials that generate or separate the trace T-ideals of the
two-dimensional commutative algebras, UT₂ and the F·1 + J algebras.

Each factory takes its numeric parameters as rationals (or "p/q" strings).
"""
from exactlinalg.rational import as_rational
from freetrace.monomials import canonicalize
from freetrace.polynomials import TracePolynomial, poly_mul


def _poly(degree, *terms):
    """Terms are ``(coefficient, word, *trace_factors)``."""
    return TracePolynomial.from_terms(
        ((canonicalize(word, traces), coefficient) for coefficient, word, *traces in terms),
        range(1, degree + 1),
    )


def f1():
    """The commutator [x1, x2]."""
    return _poly(2, (1, (1, 2)), (-1, (2, 1)))


def f2(alpha):
    alpha = as_rational(alpha)
    return _poly(2, (1, (), (1,), (2,)), (-alpha, (), (1, 2)))


def f3(alpha):
    a = as_rational(alpha)
    return _poly(
        2,
        (a * a, (1, 2)),
        (a * a, (2, 1)),
        (1, (), (1,), (2,)),
        (-a, (2,), (1,)),
        (-a, (1,), (2,)),
        (-a, (), (1, 2)),
    )


def f4(alpha, beta):
    s = as_rational(alpha) + as_rational(beta)
    return _poly(
        3,
        (-1, (1,), (2,), (3,)),
        (s, (1,), (2, 3)),
        (1, (3,), (1,), (2,)),
        (-s, (3,), (1, 2)),
        (-1, (), (1,), (2, 3)),
        (1, (), (3,), (1, 2)),
    )


def f5(alpha, beta):
    a, b = as_rational(alpha), as_rational(beta)
    p = a * b
    return _poly(
        3,
        (1, (), (1,), (2,), (3,)),
        (-(a * b * b + a * a * b), (1, 2, 3)),
        (p, (1, 2), (3,)),
        (p, (1, 3), (2,)),
        (p, (2, 3), (1,)),
        (-(a + b), (1,), (2,), (3,)),
        (a * a + a * b + b * b, (1,), (2, 3)),
        (-p, (2,), (1, 3)),
        (-p, (3,), (1, 2)),
        (p, (), (1, 2, 3)),
        (-(a + b), (), (1,), (2, 3)),
    )


def f_c2(alpha):
    """The degree-3 identity of C₂ with trace t_{α,1}."""
    a = as_rational(alpha)
    return _poly(
        3,
        (a, (1, 2, 3)),
        (1, (3,), (1, 2)),
        (1, (2,), (1, 3)),
        (1, (1,), (2, 3)),
        (-1, (2, 3), (1,)),
        (-1, (1, 3), (2,)),
        (-1, (1, 2), (3,)),
        (-1, (), (1, 2, 3)),
    )


def c2_zero_trace_identity(alpha):
    """Tr(x1)Tr(x2) - αTr(x1)x2 - αTr(x2)x1 + α²x1x2, an identity of C₂ with t_{α,0}."""
    a = as_rational(alpha)
    return _poly(
        2,
        (1, (), (1,), (2,)),
        (-a, (2,), (1,)),
        (-a, (1,), (2,)),
        (a * a, (1, 2)),
    )


def commutator_product():
    """[x1, x2][x3, x4]."""
    right = TracePolynomial.from_terms(
        [(canonicalize((3, 4)), 1), (canonicalize((4, 3)), -1)], {3, 4}
    )
    return poly_mul(f1(), right)


def trace_of_x1():
    return _poly(1, (1, (), (1,)))


def scalar_trace_identity(alpha):
    """α Tr(x1 x2) - Tr(x1)Tr(x2)."""
    alpha = as_rational(alpha)
    return _poly(2, (alpha, (), (1, 2)), (-1, (), (1,), (2,)))


def radical_product_identity(alpha, q):
    """(Tr(x1) - αx1)⋯(Tr(x_{q+1}) - αx_{q+1}), expanded."""
    alpha = as_rational(alpha)
    product = TracePolynomial.unit()
    for i in range(1, q + 2):
        factor = TracePolynomial.from_terms(
            [(canonicalize((), [(i,)]), 1), (canonicalize((i,)), -alpha)], {i}
        )
        product = poly_mul(product, factor)
    return product


def builtin_polynomials(alpha=1, beta=2, q=1):
    """Name → polynomial for every builtin, at the given parameters."""
    return {
        'f1': f1(),
        'f2': f2(alpha),
        'f3': f3(alpha),
        'f4': f4(alpha, beta),
        'f5': f5(alpha, beta),
        'f_c2': f_c2(alpha),
        'c2_zero_trace': c2_zero_trace_identity(alpha),
        'commutator_product': commutator_product(),
        'trace_x1': trace_of_x1(),
        'scalar_trace': scalar_trace_identity(alpha),
        'radical_product': radical_product_identity(alpha, q),
    }
