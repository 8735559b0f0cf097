"""Aggregate numerical checks: ladder identities, precision scaling, classical regression."""
from __future__ import annotations

from fractions import Fraction

from ..report import ResidualTracker, VerificationReport
from .coefficients import recurrence_coefficients
from .hankel import exact_jacobi_moments, hankel_recurrence, legendre01_beta
from .ladder import (
    check_string_equations,
    check_xy_recurrence,
    compatibility_residuals,
    compatibility_suite,
    ladder_quantities,
    string_equation_residuals,
    xy_sequence,
)
from .weight import WeightParams

LADDER_PARAMETER_SETS = (("1.5", "0.5", "1"), ("2", "1", "0.5"), ("0.5", "2", "2"))
MIN_SHRINK_ORDERS = 10


def ladder_reports(params: WeightParams, n_max: int = 20) -> list[VerificationReport]:
    """Compatibility conditions for n = 1..n_max, both string equations and the (x, y) recurrence."""
    lad = ladder_quantities(params, n_max + 1)
    return [
        compatibility_suite(lad, n_max),
        check_string_equations(lad),
        check_xy_recurrence(xy_sequence(lad)),
    ]


def _worst_residual(params: WeightParams, n_max: int):
    lad = ladder_quantities(params, n_max + 1)
    worst = params.ctx.zero
    for n in range(1, n_max + 1):
        for _, res in compatibility_residuals(lad, n):
            worst = max(worst, res)
    for _, res in string_equation_residuals(lad):
        worst = max(worst, res)
    return worst


def precision_scaling(params: WeightParams, n_max: int = 20, extra_digits: int = 20,
                      min_orders: int = MIN_SHRINK_ORDERS) -> VerificationReport:
    """Worst ladder residual at p and p + extra_digits digits must drop by at least min_orders decades.

    The item residual is the shortfall in decades (0 when the drop is large enough).
    """
    low = params
    high = params.with_precision(params.precision + extra_digits)
    r_low = _worst_residual(low, n_max)
    r_high = _worst_residual(high, n_max)
    ctx = high.ctx
    if r_high == 0:
        drop = ctx.inf
    elif r_low == 0:
        drop = ctx.zero
    else:
        drop = ctx.log10(ctx.mpf(r_low) / r_high)
    tag = f"alpha={params.alpha},beta={params.beta},s={params.s}"
    tr = ResidualTracker(f"ladder.precision_scaling[{tag}]", 0)
    shortfall = max(ctx.zero, min_orders - drop) if drop != ctx.inf else ctx.zero
    tr.add(f"p={low.precision} -> p={high.precision}", shortfall, drop >= min_orders,
           residual_low=ctx.mpf(r_low), residual_high=r_high,
           orders_gained=ctx.nstr(drop, 4) if drop != ctx.inf else "inf")
    return tr.report()


def ladder_suite(parameter_sets=LADDER_PARAMETER_SETS, n_max: int = 20, precision: int = 60,
                 scaling: bool = True) -> list[VerificationReport]:
    reports = []
    for a, b, s in parameter_sets:
        params = WeightParams.of(a, b, s, precision)
        reports += ladder_reports(params, n_max)
        if scaling:
            reports.append(precision_scaling(params, n_max))
    return reports


def classical_regression(n_max: int = 10, precision: int = 60, threshold=Fraction(1, 10 ** 40)) -> VerificationReport:
    """Uniform weight (alpha = beta = s = 0): Stieltjes beta_n against the Hankel oracle and the closed form."""
    params = WeightParams.of(0, 0, 0, precision)
    rec = recurrence_coefficients(params, n_max)
    _, h_alpha, h_beta, _ = hankel_recurrence(exact_jacobi_moments(2 * n_max + 2, 0, 0), n_max)
    tol = params.mp(threshold)
    tr = ResidualTracker(f"opcore.classical_regression[n_max={n_max},p={precision}]", tol)
    for n in range(1, n_max + 1):
        closed = legendre01_beta(n)
        if h_beta[n] != closed:
            tr.add(f"hankel beta_{n} = closed form", 1, False, hankel=str(h_beta[n]), closed=str(closed))
            continue
        res = abs(rec.beta[n] - params.mp(closed)) / params.mp(closed)
        tr.add(f"beta_{n}", res, exact=str(closed))
    for n in range(0, n_max + 1):
        tr.add(f"alpha_{n}", abs(rec.alpha[n] - params.mp(h_alpha[n])), exact=str(h_alpha[n]))
    return tr.report()
