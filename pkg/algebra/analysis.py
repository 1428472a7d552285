"""
Structural analyses of algebras with trace: axioms, the space of traces,
degeneracy, the Jacobson radical, ideals, quotients and trace
homomorphisms. All of it reduces to exact rank and kernel computations.
"""
import logging

from core.exceptions import (
    DimensionMismatchError,
    InvalidAlgebraError,
    NotAnIdealError,
    TraceNotVanishingError,
)
from exactlinalg.matrix import ZERO, Matrix, kernel, rank
from exactlinalg.subspace import EchelonBasis, Subspace
from algebra.structures import AlgebraIdeal, TraceAlgebra

logger = logging.getLogger(__name__)


def validate_algebra(a):
    """Check associativity, the unit and tr(xy) = tr(yx) on basis elements."""
    dim = a.dim
    for i in range(dim):
        for j in range(dim):
            ij = a.basis_product(i, j)
            for k in range(dim):
                left = a.multiply(ij, a.basis_vector(k))
                right = a.multiply(a.basis_vector(i), a.basis_product(j, k))
                if left != right:
                    raise InvalidAlgebraError(
                        f'{a.name}: product is not associative on '
                        f'({a.labels[i]}, {a.labels[j]}, {a.labels[k]})'
                    )
    for i in range(dim):
        b = a.basis_vector(i)
        if a.multiply(a.unit, b) != b or a.multiply(b, a.unit) != b:
            raise InvalidAlgebraError(f'{a.name}: unit does not act trivially on {a.labels[i]}')
    for i in range(dim):
        for j in range(i + 1, dim):
            if a.trace_of(a.basis_product(i, j)) != a.trace_of(a.basis_product(j, i)):
                raise InvalidAlgebraError(
                    f'{a.name}: tr({a.labels[i]}{a.labels[j]}) != tr({a.labels[j]}{a.labels[i]})'
                )
    logger.debug('validated %s (dimension %d)', a.name, dim)
    return a


def trace_space(a):
    """All linear functionals t with t(xy) = t(yx), as a subspace of F^dim."""
    commutators = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            ij, ji = a.basis_product(i, j), a.basis_product(j, i)
            difference = tuple(x - y for x, y in zip(ij, ji))
            if any(difference):
                commutators.append(difference)
    return kernel(Matrix.from_rows(commutators, a.dim))


def gram_matrix(a):
    return Matrix.from_rows(
        [[a.trace_of(a.basis_product(i, j)) for j in range(a.dim)] for i in range(a.dim)], a.dim
    )


def is_trace_degenerate(a):
    """True iff the bilinear form (x, y) ↦ tr(xy) is degenerate."""
    return rank(gram_matrix(a)) < a.dim


def jacobson_radical(a):
    """
    J(A) as the kernel of Q_ij = tr(L_{b_i b_j}), the regular trace form.

    Valid in characteristic 0, where the radical is exactly that kernel.
    """
    form = Matrix.from_rows(
        [[a.regular_trace(a.basis_product(i, j)) for j in range(a.dim)] for i in range(a.dim)],
        a.dim,
    )
    radical = AlgebraIdeal(a, kernel(form))
    logger.debug('radical of %s has dimension %d', a.name, radical.dimension)
    return radical


def _as_subspace(a, s):
    if isinstance(s, AlgebraIdeal):
        if s.algebra is not a:
            raise DimensionMismatchError('ideal belongs to another algebra')
        return s.subspace
    if s.ambient_dim != a.dim:
        raise DimensionMismatchError(
            f'subspace of F^{s.ambient_dim} is not inside {a.name} (dimension {a.dim})'
        )
    return s


def is_ideal(a, s):
    try:
        AlgebraIdeal(a, _as_subspace(a, s))
    except NotAnIdealError:
        return False
    return True


def is_trace_ideal(a, s):
    """True iff ``s`` is a two-sided ideal with tr(s)·1 ⊆ s."""
    s = _as_subspace(a, s)
    if not is_ideal(a, s):
        return False
    return all(s.contains(a.trace_to_unit(row)) for row in s.vectors())


def generate_ideal(a, vectors):
    """The two-sided ideal generated by ``vectors``."""
    builder = EchelonBasis(a.dim)
    pending = [tuple(v) for v in vectors]
    while pending:
        v = pending.pop()
        if not builder.add(v):
            continue
        for i in range(a.dim):
            b = a.basis_vector(i)
            pending.append(a.multiply(b, v))
            pending.append(a.multiply(v, b))
    return AlgebraIdeal(a, builder.to_subspace())


def ideal_power(a, ideal, k):
    """I^k, spanned by products of k basis elements of I."""
    if k < 1:
        raise ValueError('ideal powers start at 1')
    generators = ideal.vectors()
    current = ideal.subspace
    for _ in range(k - 1):
        current = Subspace.span(
            a.dim, [a.multiply(p, g) for p in current.vectors() for g in generators]
        )
        if current.dimension == 0:
            break
    return AlgebraIdeal(a, current)


def is_nilpotent(a, ideal):
    return ideal_power(a, ideal, a.dim + 1).is_zero()


def _quotient_data(a, i):
    subspace = _as_subspace(a, i)
    ideal = i if isinstance(i, AlgebraIdeal) else AlgebraIdeal(a, subspace)
    for row in ideal.vectors():
        if a.trace_of(row):
            raise TraceNotVanishingError(f'the trace of {a.name} does not vanish on the ideal')
    complement = subspace.complement_columns()

    def project(v):
        residual = subspace.reduce(v)
        return tuple(residual[c] for c in complement)

    return complement, project


def quotient_map(a, i):
    """
    A/I with the induced trace, and the projection A → A/I as a matrix.

    The classes of the basis elements at the non-pivot columns of I form
    the basis of A/I.
    """
    complement, project = _quotient_data(a, i)
    products = {}
    for x, c in enumerate(complement):
        for y, d in enumerate(complement):
            image = project(a.basis_product(c, d))
            products[(x, y)] = {k: v for k, v in enumerate(image) if v}
    q = TraceAlgebra.from_products(
        f'{a.name}/I',
        [a.labels[c] for c in complement],
        products,
        project(a.unit),
        [a.trace[c] for c in complement],
    )
    validate_algebra(q)
    projection = Matrix.from_rows([project(a.basis_vector(k)) for k in range(a.dim)], len(complement))
    return q, projection


def quotient(a, i):
    return quotient_map(a, i)[0]


def semisimple_quotient(a):
    """A/J(A); when the trace does not vanish on J the quotient carries the zero trace."""
    radical = jacobson_radical(a)
    if any(a.trace_of(row) for row in radical.vectors()):
        logger.info('trace of %s does not vanish on its radical; using the zero trace', a.name)
        untraced = a.with_trace((ZERO,) * a.dim, name=f'{a.name} (zero trace)')
        return quotient(untraced, AlgebraIdeal(untraced, radical.subspace))
    return quotient(a, radical)


def subalgebra(a, s, name=None):
    """The subalgebra on ``s`` (must contain 1 and be closed), basis = RREF rows of ``s``."""
    s = _as_subspace(a, s)
    if not s.contains(a.unit):
        raise InvalidAlgebraError('subspace does not contain the unit')
    rows = s.vectors()
    products = {}
    for x, r in enumerate(rows):
        for y, t in enumerate(rows):
            product = a.multiply(r, t)
            if not s.contains(product):
                raise InvalidAlgebraError('subspace is not closed under multiplication')
            products[(x, y)] = {k: v for k, v in enumerate(s.coordinates(product)) if v}
    b = TraceAlgebra.from_products(
        name or f'sub({a.name})',
        [a.render(r) for r in rows],
        products,
        s.coordinates(a.unit),
        [a.trace_of(r) for r in rows],
    )
    return validate_algebra(b)


def apply_map(phi, v):
    """φ(v) for the matrix φ whose row i is the image of basis element i."""
    result = [ZERO] * phi.cols
    for i, c in enumerate(v):
        if c:
            for k, value in enumerate(phi.row(i)):
                if value:
                    result[k] += c * value
    return tuple(result)


def check_trace_hom(phi, a, b):
    """True iff φ: A → B is a unital algebra homomorphism preserving the trace."""
    if phi.rows != a.dim or phi.cols != b.dim:
        raise DimensionMismatchError(
            f'a map {a.name} -> {b.name} needs a {a.dim}x{b.dim} matrix, got {phi.rows}x{phi.cols}'
        )
    images = [phi.row(i) for i in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            if apply_map(phi, a.basis_product(i, j)) != b.multiply(images[i], images[j]):
                return False
    if apply_map(phi, a.unit) != b.unit:
        return False
    for i in range(a.dim):
        left = tuple(a.trace[i] * u for u in b.unit)
        if left != b.trace_to_unit(images[i]):
            return False
    return True
