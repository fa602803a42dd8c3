"""Exception types shared across the library.

Every error raised on a documented failure path derives from L1L2Error, so
callers (and the CLI) can distinguish domain failures from genuine bugs.
"""


class L1L2Error(Exception):
    """Base class for all library errors."""


class FieldMismatchError(L1L2Error):
    """Real and complex values were mixed in one operation."""


class DimensionMismatchError(L1L2Error):
    """Operands have incompatible lengths or shapes."""


class UndefinedConstantError(L1L2Error):
    """The tightness constant is undefined (zero vector input)."""


class DomainError(L1L2Error):
    """An argument lies outside the operation's domain (e.g. s > n)."""


class NormalizationError(DomainError):
    """A unit-norm input was required; the message names the actual norm."""


class EmptySubspaceError(L1L2Error):
    """A spanning set contained no nonzero vector."""


class NoUniqueNearestError(L1L2Error):
    """x is orthogonal to the subspace; every unit vector is equidistant."""


class ExactSearchUnavailableError(L1L2Error):
    """Exhaustive sign-pattern search refused (dimension too large, or the
    field is complex and phases form a continuum). Use the heuristic."""
