"""
Constructors for the algebras with trace used throughout the lab.

Every constructor validates its result before returning it.
"""
from exactlinalg.rational import as_rational, format_rational
from algebra.structures import TraceAlgebra
from algebra.analysis import validate_algebra


def _fmt(value):
    return format_rational(as_rational(value))


def make_matrix_algebra(n, alpha):
    """Mₙ(F) with tr = α·(usual trace); basis e{i}{j} in row-major order."""
    if n < 1:
        raise ValueError('matrix algebras need n >= 1')
    alpha = as_rational(alpha)
    index = {(i, j): (i - 1) * n + (j - 1) for i in range(1, n + 1) for j in range(1, n + 1)}
    labels = [f'e{i}{j}' for i in range(1, n + 1) for j in range(1, n + 1)]
    products = {}
    for (i, j), left in index.items():
        for k in range(1, n + 1):
            products[(left, index[(j, k)])] = {index[(i, k)]: 1}
    unit = [1 if i == j else 0 for i in range(1, n + 1) for j in range(1, n + 1)]
    trace = [alpha if i == j else 0 for i in range(1, n + 1) for j in range(1, n + 1)]
    return validate_algebra(
        TraceAlgebra.from_products(f'M{n}^t({_fmt(alpha)})', labels, products, unit, trace)
    )


def make_diagonal_algebra(alphas):
    """Dₙ with tr(e_ii) = alphas[i]."""
    alphas = [as_rational(a) for a in alphas]
    n = len(alphas)
    if n < 1:
        raise ValueError('diagonal algebras need at least one parameter')
    labels = [f'e{i}{i}' for i in range(1, n + 1)]
    products = {(i, i): {i: 1} for i in range(n)}
    name = f'D{n}^t(' + ','.join(_fmt(a) for a in alphas) + ')'
    return validate_algebra(TraceAlgebra.from_products(name, labels, products, [1] * n, alphas))


def make_C2(alpha, beta):
    """F·1 + F·e12 with e12² = 0, tr(1) = α, tr(e12) = β."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    products = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}
    return validate_algebra(
        TraceAlgebra.from_products(
            f'C2^t({_fmt(alpha)},{_fmt(beta)})', ['1', 'e12'], products, [1, 0], [alpha, beta]
        )
    )


def make_UT2_zero_trace():
    """Upper triangular 2x2 matrices, basis e11, e12, e22, with the zero trace."""
    products = {
        (0, 0): {0: 1},
        (0, 1): {1: 1},
        (1, 2): {1: 1},
        (2, 2): {2: 1},
    }
    return validate_algebra(
        TraceAlgebra.from_products('UT2^0', ['e11', 'e12', 'e22'], products, [1, 0, 1], [0, 0, 0])
    )


def make_scalar_algebra(alpha):
    """The field F with trace t_α(a) = αa."""
    alpha = as_rational(alpha)
    return validate_algebra(
        TraceAlgebra.from_products(f'F^t({_fmt(alpha)})', ['1'], {(0, 0): {0: 1}}, [1], [alpha])
    )


def zero_algebra():
    """The zero algebra (1 = 0); it satisfies every identity."""
    return TraceAlgebra.from_products('0', [], {}, [], [])


def make_truncated_polynomial_algebra(traces):
    """F[j]/(j^{q+1}) with basis 1, j, ..., j^q and tr(j^k) = traces[k]."""
    traces = [as_rational(t) for t in traces]
    if not traces:
        raise ValueError('at least tr(1) is required')
    size = len(traces)
    labels = ['1'] + [f'j^{k}' if k > 1 else 'j' for k in range(1, size)]
    products = {
        (a, b): {a + b: 1} for a in range(size) for b in range(size) if a + b < size
    }
    name = 'F[j]/(j^%d)^t(%s)' % (size, ','.join(_fmt(t) for t in traces))
    unit = [1] + [0] * (size - 1)
    return validate_algebra(TraceAlgebra.from_products(name, labels, products, unit, traces))


def make_unipotent_algebra(n, alpha):
    """
    F·1 + Jₙ, Jₙ the strictly upper triangular n×n matrices.

    tr(1) = α and the trace vanishes on Jₙ; Jₙ^{n-1} ≠ 0 = Jₙ^n.
    """
    if n < 2:
        raise ValueError('unipotent algebras need n >= 2')
    alpha = as_rational(alpha)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    index = {pair: position + 1 for position, pair in enumerate(pairs)}
    labels = ['1'] + [f'e{i}{j}' for i, j in pairs]
    dim = len(labels)
    products = {(0, k): {k: 1} for k in range(dim)}
    products.update({(k, 0): {k: 1} for k in range(1, dim)})
    for (i, j), left in index.items():
        for (j2, k), right in index.items():
            if j == j2:
                products[(left, right)] = {index[(i, k)]: 1}
    unit = [1] + [0] * (dim - 1)
    trace = [alpha] + [0] * (dim - 1)
    return validate_algebra(
        TraceAlgebra.from_products(f'F+J{n}^t({_fmt(alpha)})', labels, products, unit, trace)
    )


def direct_sum(a, b, name=None):
    """A ⊕ B with componentwise product and tr(x, y) = tr_A(x) + tr_B(y)."""
    offset = a.dim
    labels = [f'{label}@1' for label in a.labels] + [f'{label}@2' for label in b.labels]
    products = {}
    for i in range(a.dim):
        for j in range(a.dim):
            products[(i, j)] = {k: c for k, c in enumerate(a.basis_product(i, j)) if c}
    for i in range(b.dim):
        for j in range(b.dim):
            products[(offset + i, offset + j)] = {
                offset + k: c for k, c in enumerate(b.basis_product(i, j)) if c
            }
    return validate_algebra(
        TraceAlgebra.from_products(
            name or f'({a.name} + {b.name})',
            labels,
            products,
            list(a.unit) + list(b.unit),
            list(a.trace) + list(b.trace),
        )
    )
