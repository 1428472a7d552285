"""
Catalogue of the structural claims about the two-dimensional commutative
algebras with trace and UT₂, checked on sampled parameters.

Each check returns ClaimResult records; nothing here raises on a failed
claim, so a whole catalogue run always reports every outcome.
"""
import logging
from dataclasses import dataclass, field

from core.conf import ideal_degree_cap
from exactlinalg.matrix import Matrix
from exactlinalg.rational import format_rational
from algebra.analysis import check_trace_hom, is_trace_degenerate, trace_space
from algebra.builders import (
    direct_sum,
    make_C2,
    make_diagonal_algebra,
    make_matrix_algebra,
    make_scalar_algebra,
    make_truncated_polynomial_algebra,
    make_UT2_zero_trace,
    make_unipotent_algebra,
)
from algebra.morphisms import radical_trace_witness
from freetrace import builtins
from ideals.components import component_equal, consequences_multilinear
from ideals.generators import GeneratorSet
from evalcodim.codimension import identities_subspace, trace_codimension
from evalcodim.comparison import find_separating_identity, tideal_leq
from evalcodim.evaluation import is_identity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    expected: object
    observed: object
    holds: bool
    parameters: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            'claim': self.claim,
            'expected': self.expected,
            'observed': self.observed,
            'holds': self.holds,
            'parameters': self.parameters,
        }


@dataclass(frozen=True)
class SampledParameters:
    """Admissible parameters: alpha != beta, all of them nonzero and pairwise distinct."""

    alpha: object
    beta: object
    gamma: object
    delta: object
    eta: object
    mu: object
    kappa: object
    epsilon: object

    @classmethod
    def draw(cls, sampler):
        values = sampler.nonzero_distinct(7)
        return cls(*values, epsilon=sampler.rational())

    def as_strings(self):
        return {name: format_rational(value) for name, value in vars(self).items()}


def codimension_claims(p, n_max):
    cases = [
        ('c_n(D2 with t(delta,0)) = 2^n', make_diagonal_algebra([p.delta, 0]), lambda n: 2 ** n, False),
        ('c_n(D2 with t(gamma,gamma)) = 2^n', make_diagonal_algebra([p.gamma, p.gamma]), lambda n: 2 ** n, False),
        (
            'c_n(D2 with t(alpha,beta)) = 2^(n+1) - n - 1',
            make_diagonal_algebra([p.alpha, p.beta]),
            lambda n: 2 ** (n + 1) - n - 1,
            False,
        ),
        ('c_n(C2 with t(epsilon,1)) >= 2^n', make_C2(p.epsilon, 1), lambda n: 2 ** n, True),
        ('c_n(C2 with t(0,0)) = 1', make_C2(0, 0), lambda n: 1, False),
        ('c_n(D2 with t(0,0)) = 1', make_diagonal_algebra([0, 0]), lambda n: 1, False),
        ('c_n(UT2) = 2^(n-1)(n-2) + 2', make_UT2_zero_trace(), lambda n: 2 ** (n - 1) * (n - 2) + 2, False),
    ]
    results = []
    for claim, algebra, formula, lower_bound in cases:
        for n in range(1, n_max + 1):
            observed = trace_codimension(n, algebra)
            expected = formula(n)
            holds = observed >= expected if lower_bound else observed == expected
            results.append(ClaimResult(claim, expected, observed, holds, {'n': n, 'algebra': algebra.name}))
    return results


def generator_claims(p, n):
    """Generators are identities, and in degree n they generate all identities."""
    d2_zero = make_diagonal_algebra([p.delta, 0])
    d2_equal = make_diagonal_algebra([p.gamma, p.gamma])
    d2_generic = make_diagonal_algebra([p.alpha, p.beta])
    ideals = [
        (d2_zero, GeneratorSet.of(('f1', builtins.f1()), ('f2', builtins.f2(p.delta)))),
        (d2_equal, GeneratorSet.of(('f1', builtins.f1()), ('f3', builtins.f3(p.gamma)))),
        (
            d2_generic,
            GeneratorSet.of(
                ('f1', builtins.f1()),
                ('f4', builtins.f4(p.alpha, p.beta)),
                ('f5', builtins.f5(p.alpha, p.beta)),
            ),
        ),
        (make_UT2_zero_trace(), GeneratorSet.of(('Tr', builtins.trace_of_x1()), ('[,][,]', builtins.commutator_product()))),
    ]
    results = []
    for algebra, generators in ideals:
        for g in generators:
            holds = is_identity(g.polynomial, algebra)
            results.append(ClaimResult(f'{g.name} is an identity', True, holds, holds, {'algebra': algebra.name}))
        generated = consequences_multilinear(generators, n)
        identities = identities_subspace(n, algebra)
        equal = component_equal(generated, identities)
        results.append(
            ClaimResult(
                f'{generators.describe()} generates the identities',
                identities.dimension,
                generated.dimension,
                equal,
                {'algebra': algebra.name, 'n': n},
            )
        )

    single = [
        ('f_c2 is an identity', builtins.f_c2(p.epsilon), make_C2(p.epsilon, 1)),
        ('C2 with t(alpha,0) satisfies f2', builtins.f2(p.alpha), make_C2(p.alpha, 0)),
        ('C2 with t(alpha,0) satisfies the product identity', builtins.c2_zero_trace_identity(p.alpha), make_C2(p.alpha, 0)),
        ('F+J satisfies alpha Tr(x1 x2) - Tr(x1)Tr(x2)', builtins.scalar_trace_identity(p.alpha), make_unipotent_algebra(3, p.alpha)),
        ('F+J3 satisfies the radical product identity (q = 2)', builtins.radical_product_identity(p.alpha, 2), make_unipotent_algebra(3, p.alpha)),
        (
            'F[j]/(j^3) satisfies the radical product identity (q = 2)',
            builtins.radical_product_identity(p.alpha, 2),
            make_truncated_polynomial_algebra([p.alpha, 0, 0]),
        ),
    ]
    for claim, f, algebra in single:
        holds = is_identity(f, algebra)
        results.append(ClaimResult(claim, True, holds, holds, {'algebra': algebra.name}))
    return results


def separation_claims(p):
    d2 = make_diagonal_algebra
    c2 = make_C2
    ut2 = make_UT2_zero_trace()
    commutative = [d2([p.alpha, p.beta]), d2([p.gamma, p.gamma]), d2([p.delta, 0]), c2(p.epsilon, 1)]
    pairs = [
        (d2([p.delta, 0]), d2([p.alpha, p.beta]), 2),
        (d2([p.delta, 0]), d2([p.gamma, p.gamma]), 2),
        (d2([p.delta, 0]), d2([p.eta, 0]), 2),
        (d2([p.gamma, p.gamma]), d2([p.alpha, p.beta]), 2),
        (d2([p.gamma, p.gamma]), d2([p.kappa, p.kappa]), 2),
        (d2([p.gamma, p.gamma]), d2([p.delta, 0]), 2),
        (d2([p.alpha, p.beta]), d2([p.eta, p.mu]), 3),
        (d2([p.alpha, p.beta]), d2([p.gamma, p.gamma]), 3),
        (d2([p.alpha, p.beta]), d2([p.delta, 0]), 3),
        (c2(p.alpha, 1), c2(p.beta, 1), 3),
        (d2([p.delta, 0]), c2(p.epsilon, 1), 2),
        (d2([p.gamma, p.gamma]), c2(p.epsilon, 1), 2),
        (d2([p.alpha, p.beta]), c2(p.epsilon, 1), 3),
        (c2(p.gamma, 1), d2([p.alpha, p.beta]), 3),
        (c2(p.gamma, 1), d2([p.alpha, p.alpha]), 3),
        (c2(p.gamma, 1), d2([p.alpha, 0]), 3),
    ]
    pairs.extend((ut2, other, 1) for other in commutative)
    pairs.extend((other, ut2, 2) for other in commutative)
    results = []
    for a, b, n in pairs:
        witness = find_separating_identity(a, b, n)
        observed = None if witness is None else str(witness.polynomial)
        results.append(
            ClaimResult(
                f'Id({a.name}) is not inside Id({b.name})',
                'a separating identity',
                observed,
                witness is not None,
                {'n': n},
            )
        )
    return results


def containment_claims(p, n_max):
    """The identities of M2 with gamma times the usual trace hold in its diagonal."""
    m2 = make_matrix_algebra(2, p.gamma)
    diagonal = make_diagonal_algebra([p.gamma, p.gamma])
    results = []
    # the M2 evaluation matrix is (n+1)! x 4^(n+1)
    for n in range(1, min(n_max, 3) + 1):
        holds = tideal_leq(m2, diagonal, n)
        results.append(
            ClaimResult(f'Id({m2.name}) is inside Id({diagonal.name})', True, holds, holds, {'n': n})
        )
    return results


def structure_claims(p):
    results = []
    for algebra, expected in [
        (make_matrix_algebra(2, p.alpha), 1),
        (make_matrix_algebra(3, p.alpha), 1),
        (make_diagonal_algebra([p.alpha, p.beta, p.gamma]), 3),
        (make_C2(p.alpha, p.beta), 2),
    ]:
        observed = trace_space(algebra).dimension
        results.append(
            ClaimResult('dimension of the space of traces', expected, observed, observed == expected, {'algebra': algebra.name})
        )

    for alphas in ([p.alpha, p.beta, p.gamma], [p.alpha, 0, p.gamma]):
        algebra = make_diagonal_algebra(alphas)
        expected = any(a == 0 for a in alphas)
        observed = is_trace_degenerate(algebra)
        results.append(
            ClaimResult('Dn trace is degenerate iff some alpha_i = 0', expected, observed, observed == expected, {'algebra': algebra.name})
        )

    summed = direct_sum(make_scalar_algebra(p.alpha), make_scalar_algebra(p.beta))
    holds = check_trace_hom(Matrix.identity(2), summed, make_diagonal_algebra([p.alpha, p.beta]))
    results.append(ClaimResult('F_alpha + F_beta is D2 with t(alpha,beta)', True, holds, holds, {}))

    witness = radical_trace_witness(make_C2(p.epsilon, p.mu))
    observed = witness is not None and witness.verified
    results.append(ClaimResult('radical of nonzero trace embeds C2', True, observed, observed, {'algebra': 'C2 t(epsilon,mu)'}))
    return results


def run_claims(sampler, n_max=4, samples=1):
    """Run the whole catalogue on ``samples`` independent parameter draws."""
    report = []
    for index in range(samples):
        p = SampledParameters.draw(sampler)
        logger.info('claim sample %d: %s', index, p.as_strings())
        results = (
            codimension_claims(p, n_max)
            + generator_claims(p, min(n_max, ideal_degree_cap()))
            + separation_claims(p)
            + containment_claims(p, n_max)
            + structure_claims(p)
        )
        report.append({'parameters': p.as_strings(), 'results': [r.as_dict() for r in results]})
    return report
