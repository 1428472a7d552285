"""
Error hierarchy shared by every app of the lab.

Library code raises these; the ``tracepi`` command maps them to exit codes.
"""


class TracePIError(Exception):
    """Base class for every error raised by the lab."""


class DimensionMismatchError(TracePIError, ValueError):
    """Operands live in spaces of different dimension."""


class MultilinearityError(TracePIError, ValueError):
    """A monomial or polynomial is not multilinear in its variable set."""


class EmptyTraceError(TracePIError, ValueError):
    """A trace factor would be applied to the empty word."""


class UncoveredVariableError(TracePIError, ValueError):
    """An assignment does not give a value to every variable."""


class InvalidAlgebraError(TracePIError, ValueError):
    """Structure constants, unit or trace violate the algebra axioms."""


class NotAnIdealError(TracePIError, ValueError):
    """A subspace is not a two-sided ideal."""


class TraceNotVanishingError(TracePIError, ValueError):
    """A quotient was requested by an ideal the trace does not vanish on."""


class ExpressionSyntaxError(TracePIError, ValueError):
    """Malformed polynomial text. ``position`` is the offending offset."""

    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        if position is not None:
            message = f'{message} (at position {position})'
        super().__init__(message)


class BudgetExceededError(TracePIError):
    """A computation would exceed the configured evaluation budget."""


class DegreeCapExceededError(BudgetExceededError):
    """A degree is above the configured enumeration cap."""
