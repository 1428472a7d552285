"""Named generating polynomials of a trace T-ideal."""
from dataclasses import dataclass

from core.exceptions import MultilinearityError
from freetrace.polynomials import TracePolynomial


@dataclass(frozen=True)
class NamedGenerator:
    name: str
    polynomial: TracePolynomial

    def __post_init__(self):
        f = self.polynomial
        if f.variables != frozenset(range(1, f.degree + 1)):
            raise MultilinearityError(
                f'generator {self.name} must use the variables x1..x{f.degree}, '
                f'got {sorted(f.variables)}'
            )

    @property
    def degree(self):
        return self.polynomial.degree


@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple

    @classmethod
    def of(cls, *pairs, **named):
        """``GeneratorSet.of(('f1', p), f2=q)``; positional pairs keep their order."""
        items = [NamedGenerator(name, f) for name, f in pairs]
        items.extend(NamedGenerator(name, f) for name, f in named.items())
        return cls(tuple(items))

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    @property
    def names(self):
        return [g.name for g in self.generators]

    def describe(self):
        return '<' + ', '.join(self.names) + '>'
