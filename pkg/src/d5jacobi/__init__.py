"""Exact and high-precision verification of the link between semiclassical Jacobi
orthogonal polynomials and the discrete Painleve equation d-P(A3(1)/D5(1))."""
from .errors import (
    BasisMismatchError,
    D5JacobiError,
    DomainError,
    IndeterminatePointError,
    IndexRangeError,
    InvalidRootError,
    PrecisionExhaustedError,
    SamplingExhaustedError,
    SingularStepError,
    VerificationError,
)
from .report import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "BasisMismatchError", "D5JacobiError", "DomainError", "IndeterminatePointError", "IndexRangeError",
    "InvalidRootError", "PrecisionExhaustedError", "SamplingExhaustedError", "SingularStepError",
    "VerificationError", "VerificationReport", "__version__",
]
