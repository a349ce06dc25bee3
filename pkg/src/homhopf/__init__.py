"""Exact finite-dimensional monoidal Hom-Hopf algebras and their constructions."""

from .scalars import QQ, PrimeField, RationalField, Residue
from .linear_core import LinMap, StructureTensor
from .tensor import SlotTensor
from .hom_structures import (
    AxiomReport,
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    HomHopfAlgebra,
    check_hopf,
    dual_hopf,
    opposite_hopf,
    solve_antipode,
)
from .documents import AlgebraDocument, dumps_document, load_document, loads_document
from .catalog import builtin_example, builtin_hopf

__all__ = [
    "QQ", "PrimeField", "RationalField", "Residue",
    "LinMap", "StructureTensor", "SlotTensor",
    "AxiomReport", "HomAlgebra", "HomBialgebra", "HomCoalgebra", "HomHopfAlgebra",
    "check_hopf", "dual_hopf", "opposite_hopf", "solve_antipode",
    "AlgebraDocument", "dumps_document", "load_document", "loads_document",
    "builtin_example", "builtin_hopf",
]
