"""Exact arithmetic substrate: rationals, finite fields, polynomials, matrices."""

from fractions import Fraction as Rat

from .fields import FieldError, FqElem, GF, canonical_modulus, is_prime
from .graded import GradedPoly4, NeedsMoreSamples, NotAPolynomial, graded_monomials, interpolate_graded
from .linalg import (
    DimensionError,
    InconsistentSystem,
    SingularSystem,
    charpoly,
    det,
    inverse,
    matmul,
    matvec,
    nullspace,
    rank,
    solve,
)
from .mpoly import MPoly
from .poly import DomainError, PolyError, UPoly, cubic_splitting_type, gcd, is_squarefree, resultant

__all__ = [
    "Rat",
    "GF",
    "FqElem",
    "FieldError",
    "canonical_modulus",
    "is_prime",
    "UPoly",
    "PolyError",
    "DomainError",
    "gcd",
    "resultant",
    "is_squarefree",
    "cubic_splitting_type",
    "MPoly",
    "GradedPoly4",
    "graded_monomials",
    "interpolate_graded",
    "NeedsMoreSamples",
    "NotAPolynomial",
    "charpoly",
    "det",
    "rank",
    "nullspace",
    "solve",
    "inverse",
    "matmul",
    "matvec",
    "DimensionError",
    "SingularSystem",
    "InconsistentSystem",
]
