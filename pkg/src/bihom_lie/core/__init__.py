"""Exact linear algebra, BiHom-Lie structures and their cochain complexes."""

from .bihom_core import AxiomReport, BiHomAlgebra, BracketTensor, Representation, Violation
from .cochains import BiHomCochainSpace, Cochain
from .compatible import CompatibleCochain, CompatiblePair, MCPair
from .qlinalg import RationalMatrix

__all__ = [
    "AxiomReport",
    "BiHomAlgebra",
    "BracketTensor",
    "Representation",
    "Violation",
    "BiHomCochainSpace",
    "Cochain",
    "CompatibleCochain",
    "CompatiblePair",
    "MCPair",
    "RationalMatrix",
]
