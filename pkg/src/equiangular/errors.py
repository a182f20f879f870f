"""Exception hierarchy.

``PreconditionError`` covers bad inputs (CLI exit code 2);
``VerificationError`` covers certificates that fail re-verification (exit 1).
"""


class EquiangularError(Exception):
    pass


class PreconditionError(EquiangularError, ValueError):
    pass


class InvalidParameters(PreconditionError):
    pass


class EmptyEdgeSet(PreconditionError):
    pass


class MalformedGraph6(PreconditionError):
    pass


class OrderTooLarge(PreconditionError):
    pass


class EigenvalueBelowThreshold(PreconditionError):
    pass


class BelowThreshold(PreconditionError):
    pass


class Disconnected(PreconditionError):
    pass


class NotCubic(PreconditionError):
    pass


class WrongOrder(PreconditionError):
    pass


class DimensionTooSmall(PreconditionError):
    pass


class AmbiguousSign(PreconditionError):
    pass


class BudgetExhausted(EquiangularError):
    """A step budget ran out before the construction met its target."""


class FactorizationResidual(EquiangularError):
    pass


class VerificationError(EquiangularError):
    pass
