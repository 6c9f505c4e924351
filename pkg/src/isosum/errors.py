"""Exception types shared by all isosum modules."""


class IsosumError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateInput(IsosumError):
    """Input shape has no usable geometry (zero area, too few vertices, ...)."""


class NotConvex(IsosumError):
    """Operation requires a convex region."""


class NotConcave(IsosumError):
    """Operation requires a concave polygon (convex input has a direct path)."""


class NotClosed(IsosumError):
    """Polyhedron surface is not a closed 2-manifold."""


class OutsideRegion(IsosumError):
    """Query point is not strictly inside the region."""


class CVSRegion(IsosumError):
    """Level-set operation is undefined when the functional is constant."""


class NoInteriorEdge(IsosumError):
    """Partition has no adjacent cell pair; signals a partition bug."""


class ParseError(IsosumError):
    """Scene text is not syntactically valid. Carries line/column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ValidationError(IsosumError):
    """Scene is well-formed but violates a geometric invariant."""
