"""
Factories for randomized algebras and multilinear trace polynomials.
"""
from fractions import Fraction

import factory
import factory.random
from faker import Faker

from algebra.builders import make_C2, make_diagonal_algebra
from freetrace.bases import enumerate_MT_basis
from freetrace.polynomials import TracePolynomial

fake = Faker()


def fake_rational(nonzero=False):
    numerator = fake.pyint(min_value=-9, max_value=9)
    while nonzero and numerator == 0:
        numerator = fake.pyint(min_value=-9, max_value=9)
    return Fraction(numerator, fake.pyint(min_value=1, max_value=5))


def reseed(seed):
    """Seed Faker and factory_boy together."""
    Faker.seed(seed)
    factory.random.reseed_random(seed)


class DiagonalAlgebraFactory(factory.Factory):
    """Dn with random traces; ``zeros`` of them forced to 0."""

    class Meta:
        model = make_diagonal_algebra

    class Params:
        size = 2
        zeros = 0

    alphas = factory.LazyAttribute(
        lambda o: [Fraction(0)] * o.zeros + [fake_rational(nonzero=True) for _ in range(o.size - o.zeros)]
    )


class C2AlgebraFactory(factory.Factory):
    class Meta:
        model = make_C2

    alpha = factory.LazyFunction(fake_rational)
    beta = factory.LazyFunction(lambda: fake_rational(nonzero=True))


class MultilinearPolynomialFactory(factory.Factory):
    """A random combination of ``size`` MTn basis monomials."""

    class Meta:
        model = TracePolynomial.from_terms

    class Params:
        degree = 2
        size = 3

    terms = factory.LazyAttribute(
        lambda o: [
            (fake.random_element(enumerate_MT_basis(o.degree)), fake_rational(nonzero=True))
            for _ in range(o.size)
        ]
    )
    variables = factory.LazyAttribute(lambda o: range(1, o.degree + 1))
