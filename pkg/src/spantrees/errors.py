"""Exception hierarchy shared by every module of the package."""


class SpanTreesError(Exception):
    """Base class for all package errors."""


class InvalidParameter(SpanTreesError, ValueError):
    pass


class DomainError(SpanTreesError, ValueError):
    """Input outside the mathematical domain (e.g. a disconnected graph)."""


class FitFailure(SpanTreesError):
    """No recurrence of admissible order reproduces the data."""


class InsufficientData(SpanTreesError):
    pass


class InvalidGF(SpanTreesError, ValueError):
    pass


class PrecisionFailure(SpanTreesError):
    """Root refinement did not converge at the requested precision."""


class AmbiguousDominance(SpanTreesError):
    """Several denominator roots share the minimal modulus."""


class RemovableSingularity(SpanTreesError):
    pass


class StructureError(SpanTreesError):
    """Tree and leaf generating functions do not have the expected pole structure."""


class NoConvergence(SpanTreesError):
    pass
