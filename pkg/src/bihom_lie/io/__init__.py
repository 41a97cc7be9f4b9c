"""Input/Output modules.

Documents live in :mod:`bihom_lie.io.document`, which depends on ``core``
and is therefore not imported here.
"""

from .validators import DocumentValidator
from .exceptions import (
    BiHomLieError, DocumentError, DocumentParseError, DocumentReadError, DimensionMismatchError,
    MalformedRationalError, MissingEntryError, AlgebraError, ComplexError,
    ConfigurationError
)

__all__ = [
    "DocumentValidator",
    "BiHomLieError",
    "DocumentError",
    "DocumentParseError",
    "DocumentReadError",
    "DimensionMismatchError",
    "MalformedRationalError",
    "MissingEntryError",
    "AlgebraError",
    "ComplexError",
    "ConfigurationError",
]
