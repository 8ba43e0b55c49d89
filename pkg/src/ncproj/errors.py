"""Exception hierarchy shared by every ncproj module."""
from __future__ import annotations


class NcprojError(Exception):
    """Base class for all errors raised by ncproj."""


class FieldMismatch(NcprojError):
    pass


class DimensionMismatch(NcprojError):
    pass


class ContextMismatch(NcprojError):
    """Objects built over different algebras or generator tables were combined."""


class ParseError(NcprojError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class PresentationError(NcprojError):
    pass


class InhomogeneousRelation(PresentationError):
    pass


class DuplicateGenerator(PresentationError):
    pass


class ZeroWeight(PresentationError):
    pass


class DegreeAboveBound(NcprojError):
    """A degree beyond the certified truncation bound was requested."""


class WindowError(NcprojError):
    """A computation needed data outside a certified degree window."""

    def __init__(self, message: str, degree: int | None = None):
        self.degree = degree
        if degree is not None:
            message = f"{message} (degree {degree})"
        super().__init__(message)


class WindowInsufficient(WindowError):
    pass


class WindowExceeded(WindowError):
    pass


class WindowExceedsBound(WindowError):
    pass


class JActsNonzero(NcprojError):
    pass


class NotADerivation(NcprojError):
    pass


class NotAnAutomorphism(NcprojError):
    pass


class NotAMorphism(NcprojError):
    pass


class AlgebraNotConcentrated(NcprojError):
    pass
