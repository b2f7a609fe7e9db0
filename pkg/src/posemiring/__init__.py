"""Finite po-semirings as Cayley tables: verification, element and ideal
analysis, zero-divisor graphs, explicit constructions with inverse
decompositions, finite-ring ideal semirings, an isomorph-free census, and an
executable theorem catalog."""

from .core import (
    AxiomReport,
    ClosureError,
    DomainError,
    ElementAnalysis,
    NotApplicableError,
    PoSemiringTable,
    StructureError,
    analyze_elements,
    check_conditions,
    enumerate_ideals,
    find_isomorphism,
    make_table,
    parse_psr,
    to_text,
    verify_axioms,
)

__all__ = [
    "AxiomReport",
    "ClosureError",
    "DomainError",
    "ElementAnalysis",
    "NotApplicableError",
    "PoSemiringTable",
    "StructureError",
    "analyze_elements",
    "check_conditions",
    "enumerate_ideals",
    "find_isomorphism",
    "make_table",
    "parse_psr",
    "to_text",
    "verify_axioms",
]

__version__ = "0.1.0"
