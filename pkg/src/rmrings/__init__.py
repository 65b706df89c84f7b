"""Exact ideal arithmetic and seeded theorem checks for rings with the
restricted minimum condition: finite commutative rings, imaginary quadratic
orders, and the finite/cofinite Boolean ring."""

from .cofinring import BoolSet, CofinIdeal, ascending_chain, is_essential_ideal, soc_projection
from .finring import (
    CapExceeded,
    FiniteRing,
    IdealF,
    RingParseError,
    composition_length,
    decompose_fields,
    enumerate_ideals,
    ideal_generate,
    is_essential,
    nilradical,
    parse_ring,
    prime_spectrum,
    quotient,
    rm_poly_criterion,
    socle,
)
from .quadorder import (
    FracIdeal,
    QElem,
    QIdeal,
    QuadOrder,
    colon_ideal,
    divides,
    factor_into_maximals,
    ideal_from_generators,
    ideal_mul,
    inverse_fractional,
    is_invertible,
    maximal_ideals_above,
    quotient_ring,
)
from .verifier import CHECKS, VerifyReport, run_check

__all__ = [
    "BoolSet",
    "CHECKS",
    "CapExceeded",
    "CofinIdeal",
    "FiniteRing",
    "FracIdeal",
    "IdealF",
    "QElem",
    "QIdeal",
    "QuadOrder",
    "RingParseError",
    "VerifyReport",
    "ascending_chain",
    "colon_ideal",
    "composition_length",
    "decompose_fields",
    "divides",
    "enumerate_ideals",
    "factor_into_maximals",
    "ideal_from_generators",
    "ideal_generate",
    "ideal_mul",
    "inverse_fractional",
    "is_essential",
    "is_essential_ideal",
    "is_invertible",
    "maximal_ideals_above",
    "nilradical",
    "parse_ring",
    "prime_spectrum",
    "quotient",
    "quotient_ring",
    "rm_poly_criterion",
    "run_check",
    "soc_projection",
    "socle",
]

__version__ = "0.1.0"
