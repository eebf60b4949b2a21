"""Fundamental groups of toric varieties and complexity-one T-varieties.

Exact lattice and polyhedral arithmetic, polyhedral divisors on the
projective line, presentation builders, and a finitely presented group
engine (Todd-Coxeter, Tietze, abelianization).
"""
from .divisorial import (
    EMPTY,
    DivisorError,
    DivisorialFanP1,
    PPDivisor,
    degree,
    evaluate_coefficients,
    is_proper,
    klt_necessary_check,
    platonic_triple_check,
)
from .lattice import AbelianInvariants, hnf, quotient_invariants, saturate, smith, snf
from .pi1 import (
    complexity_one_presentation,
    cstar_bundle_presentation,
    local_pi1_presentation,
    toric_pi1_invariants,
    toric_pi1_presentation,
)
from .polyhedral import Cone, Fan, Polyhedron

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "AbelianInvariants",
    "Cone",
    "DivisorError",
    "DivisorialFanP1",
    "Fan",
    "PPDivisor",
    "Polyhedron",
    "complexity_one_presentation",
    "cstar_bundle_presentation",
    "degree",
    "evaluate_coefficients",
    "hnf",
    "is_proper",
    "klt_necessary_check",
    "local_pi1_presentation",
    "platonic_triple_check",
    "quotient_invariants",
    "saturate",
    "smith",
    "snf",
    "toric_pi1_invariants",
    "toric_pi1_presentation",
]
