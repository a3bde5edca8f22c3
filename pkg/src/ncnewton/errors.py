"""Exception hierarchy shared by every module of the package."""


class NcNewtonError(Exception):
    """Base class; ``code`` is the stable identifier used by the CLI."""

    code = "Error"


class VariantMismatch(NcNewtonError, TypeError):
    code = "VariantMismatch"


class NotInvertible(NcNewtonError, ZeroDivisionError):
    code = "NotInvertible"


class NonGeneric(NcNewtonError):
    """Elimination or biorthogonalization hit a non-invertible pivot at ``order``."""

    code = "NonGeneric"

    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"no invertible pivot at order {order}")


class IndexOutOfBounds(NcNewtonError, IndexError):
    code = "IndexOutOfBounds"


class DuplicateIndex(NcNewtonError, ValueError):
    code = "DuplicateIndex"


class DuplicateNode(NcNewtonError, ValueError):
    code = "DuplicateNode"


class NotPositiveDefinite(NcNewtonError, ValueError):
    code = "NotPositiveDefinite"


class ConsistencyError(NcNewtonError, AssertionError):
    """Two routes to the same quantity disagreed; indicates a bug, never bad input."""

    code = "ConsistencyError"


class ParseError(NcNewtonError, ValueError):
    code = "ParseError"
    location = "$"


class SchemaError(NcNewtonError, ValueError):
    code = "SchemaError"

    def __init__(self, message, location="$"):
        self.location = location
        super().__init__(message)
