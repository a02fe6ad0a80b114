"""Exact computation of the jimm involution: the outer automorphism of PGL(2,Z)
acting on the real line through continued fractions and Farey-tree boundary words."""

from .boundary import BoundaryWord, cf_to_word, number_to_word, word_to_cf, word_value, xor_words
from .cf import ContinuedFraction, DomainError, rational_to_cf, surd_to_periodic_cf, periodic_cf_to_surd
from .core import (
    InsufficientPrecision,
    JumpData,
    OrbitFixedPoint,
    RepresentationMismatch,
    delta_integer_formula,
    galois_commute_check,
    is_noble,
    jimm,
    jimm_cf,
    jimm_q_rational,
    jimm_stream,
    jimm_stream_decimal,
    jimm_surd,
    jump,
    orbit_fixed_point,
)
from .matrix import Mat, mobius_apply
from .parse import parse_number
from .pgl2 import Word, jimm_matrix, matrix_to_word, word_to_matrix
from .surd import INF, QuadSurd

__all__ = [
    "BoundaryWord",
    "ContinuedFraction",
    "DomainError",
    "INF",
    "InsufficientPrecision",
    "JumpData",
    "Mat",
    "OrbitFixedPoint",
    "QuadSurd",
    "RepresentationMismatch",
    "Word",
    "cf_to_word",
    "delta_integer_formula",
    "galois_commute_check",
    "is_noble",
    "jimm",
    "jimm_cf",
    "jimm_matrix",
    "jimm_q_rational",
    "jimm_stream",
    "jimm_stream_decimal",
    "jimm_surd",
    "jump",
    "matrix_to_word",
    "mobius_apply",
    "number_to_word",
    "orbit_fixed_point",
    "parse_number",
    "periodic_cf_to_surd",
    "rational_to_cf",
    "surd_to_periodic_cf",
    "word_to_cf",
    "word_to_matrix",
    "word_value",
    "xor_words",
]
