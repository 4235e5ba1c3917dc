"""Exact root-configuration classification of real monic quintics."""

from .classifier import (
    ComplexMultiplicity,
    CubicPositiveCount,
    RealConfiguration,
    WitnessRoot,
    classify_complex,
    classify_real,
    cubic_positive_count,
    order_leaf4,
    witness_roots,
)
from .errors import DomainError, InternalInconsistency, PreconditionError
from .invariants import QuinticCoeffs, QuinticInvariants, compute_invariants, verify_identities
from .kernels import BACKEND
from .oracle import CrossCheckReport, RootSpec, build_quintic, cross_check, independent_classify
from .parsing import ParseError, format_polynomial, parse_polynomial
from .polycore import Poly, discriminant, gcd, resultant, squarefree_decompose
from .sturm import IsolatingInterval, SturmChain, count_real_roots, isolate_real_roots, sturm_chain

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ComplexMultiplicity", "CrossCheckReport", "CubicPositiveCount", "DomainError",
    "InternalInconsistency", "IsolatingInterval", "ParseError", "Poly", "PreconditionError",
    "QuinticCoeffs", "QuinticInvariants", "RealConfiguration", "RootSpec", "SturmChain", "WitnessRoot",
    "build_quintic", "classify_complex", "classify_real", "compute_invariants", "count_real_roots",
    "cross_check", "cubic_positive_count", "discriminant", "format_polynomial", "gcd",
    "independent_classify", "isolate_real_roots", "order_leaf4", "parse_polynomial", "resultant",
    "squarefree_decompose", "sturm_chain", "verify_identities", "witness_roots",
]
