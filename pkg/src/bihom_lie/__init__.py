"""BiHom-Lie algebras: exact axiom checks, compatible structures and cohomology."""

__version__ = "0.1.0"
__author__ = "BiHom-Lie Team"

from .core.bihom_core import (
    BiHomAlgebra,
    BracketTensor,
    Representation,
    adjoint_representation,
    check_bihom_lie,
    check_representation,
    yau_twist,
)
from .core.calculator import CohomologyCalculator
from .core.cochains import Cochain, ce_coboundary, cohomology_dim, nr_bracket
from .core.compatible import (
    CompatiblePair,
    check_compatible_pair,
    compatible_cohomology_dim,
    nijenhuis_deform,
    rb_compatible_pair,
)
from .core.qlinalg import RationalMatrix
from .io.document import InputDocument, parse_input, serialize_document
from .utils.logging import setup_logger

__all__ = [
    # Algebras
    "BiHomAlgebra",
    "BracketTensor",
    "Representation",
    "adjoint_representation",
    "check_bihom_lie",
    "check_representation",
    "yau_twist",

    # Cochains and cohomology
    "Cochain",
    "ce_coboundary",
    "cohomology_dim",
    "nr_bracket",
    "CohomologyCalculator",

    # Compatible structures
    "CompatiblePair",
    "check_compatible_pair",
    "compatible_cohomology_dim",
    "nijenhuis_deform",
    "rb_compatible_pair",

    # Linear algebra, documents, utilities
    "RationalMatrix",
    "InputDocument",
    "parse_input",
    "serialize_document",
    "setup_logger",
]
