"""Orthogonal polynomials for the time-evolved Jacobi weight x^alpha (1-x)^beta e^(-s x)."""
from .checks import classical_regression, ladder_reports, ladder_suite, precision_scaling
from .coefficients import RecurrenceData, moment, recurrence_coefficients
from .ladder import (
    LadderData,
    XYSequence,
    check_compatibility,
    check_string_equations,
    check_xy_recurrence,
    compatibility_suite,
    ladder_quantities,
    xy_sequence,
)
from .quadrature import gauss_jacobi01, make_context
from .weight import WeightParams

__all__ = [
    "LadderData", "RecurrenceData", "WeightParams", "XYSequence",
    "check_compatibility", "classical_regression", "ladder_reports", "ladder_suite", "precision_scaling", "check_string_equations", "check_xy_recurrence", "compatibility_suite",
    "gauss_jacobi01", "ladder_quantities", "make_context", "moment", "recurrence_coefficients", "xy_sequence",
]
