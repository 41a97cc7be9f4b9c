"""Custom exceptions for documents, algebras and cochain complexes."""

from typing import Optional


class BiHomLieError(Exception):
    """Base class for all package errors."""
    pass


class DocumentError(BiHomLieError):
    """Base class for input document errors."""
    pass


class DocumentParseError(DocumentError):
    """Raised when a document is not well-formed structured text."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None,
                 field: Optional[str] = None):
        location = []
        if field is not None:
            location.append(f"field {field}")
        if line is not None:
            location.append(f"line {line}, column {column}")
        super().__init__(f"{message} ({'; '.join(location)})" if location else message)
        self.line = line
        self.column = column
        self.field = field


class DocumentReadError(DocumentError):
    """Raised when a document exists but cannot be read."""
    pass


class DimensionMismatchError(DocumentError):
    """Raised when a matrix or tensor shape disagrees with dim/dimV."""

    def __init__(self, field: str, expected, actual):
        super().__init__(f"{field}: expected shape {expected}, got {actual}")
        self.field = field
        self.expected = expected
        self.actual = actual


class MalformedRationalError(DocumentError, ValueError):
    """Raised when a value does not parse as "p/q" or an integer."""
    pass


class MissingEntryError(DocumentError, KeyError):
    """Raised when a named bracket, representation or operator is absent."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class AlgebraError(BiHomLieError):
    """Base class for errors on algebra data."""
    pass


class ShapeMismatchError(AlgebraError):
    """Raised when operands have incompatible dimensions."""
    pass


class BracketIndexError(AlgebraError, IndexError):
    """Raised when a bracket or action index is out of range."""
    pass


class NonRegularError(AlgebraError):
    """Raised when an inverse twist is required but the twist is singular."""
    pass


class TwistCommutationError(AlgebraError):
    """Raised when an operator fails to commute with the twist maps."""
    pass


class PreconditionError(AlgebraError):
    """Raised when a construction's input or output fails an axiom check."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ComplexError(BiHomLieError):
    """Base class for cochain complex errors."""
    pass


class CochainSpaceError(ComplexError):
    """Raised when a cochain does not intertwine the twist maps."""
    pass


class ClosureError(ComplexError):
    """Raised when a Nijenhuis-Richardson bracket leaves the twisted cochain space."""
    pass


class DifferentialSquareError(ComplexError):
    """Raised when a coboundary applied twice is not zero."""
    pass


class InvalidMCPairError(ComplexError):
    """Raised when a pair expected to be Maurer-Cartan is not."""
    pass


class ConfigurationError(BiHomLieError):
    """Raised when command or flag configuration is invalid."""
    pass
