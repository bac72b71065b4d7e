"""Braid words, crossing oracles and Jones polynomials for Lissajous-toric knots K(N, q, p)."""

from __future__ import annotations

from .braid import BraidWord, Permutation, inverse, mirror, permutation, power, product
from .errors import (
    CriticalPhaseError,
    LissatoricError,
    ParameterError,
    StrandLimitError,
    StrandMismatchError,
    UnsupportedClosureError,
)
from .invariants import (
    bracket_state_sum,
    closure_component_count,
    is_palindromic,
    jones_polynomial,
    kauffman_bracket,
    rudolph_genus,
    writhe,
)
from .laurent import LaurentPoly
from .oracle import (
    CrossingEvent,
    PhaseSpec,
    Verdict,
    compare_up_to_mirror,
    default_phase,
    detect_braid_float,
    enumerate_braid,
    enumerate_events,
    oriented_enumerate_braid,
)
from .symbolic import (
    BraidParams,
    Classification,
    base_braid,
    bezout_coefficients,
    classify,
    lissajous_braid,
    normalize_params,
    trivial_family_braid,
)

__version__ = "0.1.0"

__all__ = [
    "BraidParams",
    "BraidWord",
    "Classification",
    "CriticalPhaseError",
    "CrossingEvent",
    "LaurentPoly",
    "LissatoricError",
    "ParameterError",
    "Permutation",
    "PhaseSpec",
    "StrandLimitError",
    "StrandMismatchError",
    "UnsupportedClosureError",
    "Verdict",
    "base_braid",
    "bezout_coefficients",
    "bracket_state_sum",
    "classify",
    "closure_component_count",
    "compare_up_to_mirror",
    "default_phase",
    "detect_braid_float",
    "enumerate_braid",
    "enumerate_events",
    "inverse",
    "is_palindromic",
    "jones_polynomial",
    "kauffman_bracket",
    "lissajous_braid",
    "mirror",
    "normalize_params",
    "oriented_enumerate_braid",
    "permutation",
    "power",
    "product",
    "rudolph_genus",
    "trivial_family_braid",
    "writhe",
]
