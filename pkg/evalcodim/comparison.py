"""Comparing the trace T-ideals of two algebras degree by degree."""
import logging
from dataclasses import dataclass

from core.exceptions import TracePIError
from exactlinalg.subspace import subspace_leq
from freetrace.bases import from_coordinates
from evalcodim.codimension import identities_subspace
from evalcodim.evaluation import find_nonvanishing_tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeparatingIdentity:
    """An identity of one algebra with a basis tuple where it fails on the other."""

    polynomial: object
    assignment: tuple
    labels: tuple
    value: object


def tideal_leq(a, b, n, budget=None):
    """True iff MTₙ ∩ Id^tr(A) ⊆ MTₙ ∩ Id^tr(B)."""
    return subspace_leq(
        identities_subspace(n, a, budget).subspace, identities_subspace(n, b, budget).subspace
    )


def find_separating_identity(a, b, n, budget=None):
    """
    An identity of A of degree n that is not an identity of B, or None.

    The polynomial is the first RREF basis vector of A's identities outside
    B's; the tuple is the lexicographically first where it does not vanish.
    """
    ours = identities_subspace(n, a, budget)
    theirs = identities_subspace(n, b, budget)
    for row in ours.subspace.vectors():
        if theirs.subspace.contains(row):
            continue
        f = from_coordinates(row, n, cap=n)
        found = find_nonvanishing_tuple(f, b)
        if found is None:
            raise TracePIError(
                f'identity subspaces of {a.name} and {b.name} disagree with evaluation'
            )
        indices, value = found
        logger.debug('separated %s from %s in degree %d', a.name, b.name, n)
        return SeparatingIdentity(f, indices, tuple(b.labels[i] for i in indices), value)
    return None
