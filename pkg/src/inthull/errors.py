"""Exception types shared across the package."""


class IntHullError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(IntHullError, ValueError):
    """A matrix or vector has an incompatible shape."""


class SingularMatrixError(IntHullError, ValueError):
    """A square matrix required to be nonsingular has determinant zero."""


class DegenerateRowError(IntHullError, ValueError):
    """An all-zero inequality row where a proper one is required."""


class DegenerateVertexError(IntHullError, RuntimeError):
    """A claimed vertex whose tight rows do not have full rank."""


class UnboundedError(IntHullError, ValueError):
    """An operation that needs a bounded polyhedron got an unbounded one."""


class PolyhedronStateError(IntHullError, RuntimeError):
    """A query unsupported for the polyhedron's current state (empty/unbounded)."""


class IntegerVertexError(IntHullError, ValueError):
    """Cut generation was asked to cut off an already-integer vertex."""


class ResourceLimitError(IntHullError, RuntimeError):
    """A configured size cap (determinant, enumeration volume, ...) was exceeded."""


class IterationLimitError(IntHullError, RuntimeError):
    """The cutting loop hit its iteration cap; carries the partial statistics."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats


class ParseError(IntHullError, ValueError):
    """Malformed input file; carries the 1-based offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
