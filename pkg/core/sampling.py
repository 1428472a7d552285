"""
Seeded sampling of rational parameters.

Claims that hold "for all admissible parameters" are checked on a few
sampled values; the seed is always reported alongside the results.
"""
import random
from fractions import Fraction


class ParameterSampler:
    """Draw small nonzero rationals from a seeded generator."""

    def __init__(self, seed, max_numerator=9, max_denominator=5):
        self.seed = seed
        self.max_numerator = max_numerator
        self.max_denominator = max_denominator
        self._rng = random.Random(seed)

    def nonzero(self):
        numerator = 0
        while numerator == 0:
            numerator = self._rng.randint(-self.max_numerator, self.max_numerator)
        denominator = self._rng.randint(1, self.max_denominator)
        return Fraction(numerator, denominator)

    def nonzero_distinct(self, count, avoid=()):
        """Return ``count`` pairwise distinct nonzero values outside ``avoid``."""
        drawn = []
        excluded = set(avoid)
        while len(drawn) < count:
            value = self.nonzero()
            if value not in excluded:
                drawn.append(value)
                excluded.add(value)
        return drawn

    def choice(self, items):
        return self._rng.choice(list(items))

    def randint(self, low, high):
        return self._rng.randint(low, high)

    def rational(self):
        """A rational that may be zero."""
        if self._rng.random() < 0.2:
            return Fraction(0)
        return self.nonzero()
