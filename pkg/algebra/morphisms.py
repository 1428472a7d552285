"""
Explicit trace homomorphisms: the isomorphisms between differently
presented algebras, and the copy of C₂ inside an algebra whose trace does
not vanish on the radical.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from exactlinalg.matrix import Matrix
from exactlinalg.rational import as_rational
from exactlinalg.subspace import Subspace
from algebra.analysis import (
    apply_map,
    check_trace_hom,
    generate_ideal,
    jacobson_radical,
    quotient_map,
    subalgebra,
)
from algebra.builders import make_C2
from algebra.structures import AlgebraElement, TraceAlgebra

logger = logging.getLogger(__name__)


def diagonal_permutation_map(sigma):
    """e_ii ↦ e_σ(i)σ(i), a trace isomorphism Dₙ^α → Dₙ^{α∘σ⁻¹}."""
    n = sigma.n
    return Matrix.from_rows(
        [[1 if k == sigma(i) - 1 else 0 for k in range(n)] for i in range(1, n + 1)], n
    )


def c2_rescaling_map(beta, beta_prime):
    """1 ↦ 1, e12 ↦ (β/β′) e12: C₂^{t_{α,β}} ≅ C₂^{t_{α,β′}} for β, β′ ≠ 0."""
    beta, beta_prime = as_rational(beta), as_rational(beta_prime)
    if not beta or not beta_prime:
        raise ValueError('both trace values of e12 must be nonzero')
    return Matrix.from_rows([[1, 0], [0, beta / beta_prime]], 2)


@dataclass(frozen=True)
class RadicalTraceWitness:
    """
    A radical element j with tr(j) ≠ 0 and the resulting embedding
    C₂^{t_{α,β}} → B′/I, where B′ is spanned by the powers of j and
    I by j^cut and its higher powers.
    """

    element: AlgebraElement
    nilpotency_index: int
    cut: int
    alpha: Fraction
    beta: Fraction
    powers_algebra: TraceAlgebra
    quotient_algebra: TraceAlgebra
    c2: TraceAlgebra
    embedding: Matrix
    verified: bool


def _powers(a, j):
    powers = [a.unit]
    current = j
    while any(current):
        powers.append(current)
        current = a.multiply(current, j)
        if len(powers) > a.dim + 1:
            raise ValueError('element is not nilpotent')
    return powers


def radical_trace_witness(a):
    """The C₂ copy forced by a radical element of nonzero trace; None if tr(J) = 0."""
    radical = jacobson_radical(a)
    j = next((row for row in radical.vectors() if a.trace_of(row)), None)
    if j is None:
        return None
    powers = _powers(a, j)
    traces = [a.trace_of(p) for p in powers]
    cut = 1 + max(k for k in range(1, len(traces)) if traces[k])
    alpha, beta = traces[0], traces[cut - 1]

    span = Subspace.span(a.dim, powers)
    b_prime = subalgebra(a, span, name=f'F[j] in {a.name}')
    coordinates = [span.coordinates(p) for p in powers]
    tail = coordinates[cut:] or [b_prime.zero_vector()]
    ideal = generate_ideal(b_prime, tail)
    b_bar, projection = quotient_map(b_prime, ideal)

    c2 = make_C2(alpha, beta)
    embedding = Matrix.from_rows(
        [b_bar.unit, apply_map(projection, coordinates[cut - 1])], b_bar.dim
    )
    verified = check_trace_hom(embedding, c2, b_bar)
    logger.info(
        '%s: radical element of nilpotency index %d gives C2 with alpha=%s beta=%s',
        a.name, len(powers), alpha, beta,
    )
    return RadicalTraceWitness(
        element=a.element(j),
        nilpotency_index=len(powers),
        cut=cut,
        alpha=alpha,
        beta=beta,
        powers_algebra=b_prime,
        quotient_algebra=b_bar,
        c2=c2,
        embedding=embedding,
        verified=verified,
    )


