"""Exact generalized (almost) contact geometry on Lie algebras over Q(i)."""
from __future__ import annotations

from .courant import (
    ClosednessReport, GenVector, SubbundleSpan, closedness, courant_bracket, evaluation, is_isotropic,
    pairing,
)
from .errors import (
    ExpectationMismatch, GcxError, InvalidStructure, ParseError, PreconditionError, ValidationError,
)
from .exactnum import HALF, I, ONE, ZERO, GaussRational, Matrix, as_scalar, format_scalar, parse_scalar
from .liealg import LieAlgebra, ce_d, central_extension, check_jacobi
from .multilinear import Endo, KForm, KVector, contract, wedge
from .structures import (
    Classification, DeformParam, Gacs, Gcs, Level, classify, deform_E, eigenbundles, make_gacs,
    mc_check, obstruction, validate_gacs,
)

__version__ = "0.1.0"

__all__ = [
    "HALF", "I", "ONE", "ZERO", "Classification", "ClosednessReport", "DeformParam", "Endo",
    "ExpectationMismatch", "Gacs", "GaussRational", "Gcs", "GcxError", "GenVector", "InvalidStructure",
    "KForm", "KVector", "Level", "LieAlgebra", "Matrix", "ParseError", "PreconditionError",
    "SubbundleSpan", "ValidationError", "as_scalar", "ce_d", "central_extension", "check_jacobi",
    "classify", "closedness", "contract", "courant_bracket", "deform_E", "eigenbundles", "evaluation",
    "format_scalar", "is_isotropic", "make_gacs", "mc_check", "obstruction", "pairing", "parse_scalar",
    "validate_gacs", "wedge",
]
