"""Ladder-operator quantities R_n, r_n and the identities they satisfy."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError, IndexRangeError, SingularStepError
from ..report import ResidualTracker, VerificationReport
from .coefficients import RecurrenceData, node_count, recurrence_coefficients, weighted_rule
from .weight import WeightParams

DEFAULT_SAMPLE_POINTS = (Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(-3, 7), Fraction(5, 3))


def relative_residual(ctx, lhs_terms, rhs_terms):
    """|sum(lhs) - sum(rhs)| scaled by the largest term magnitude (at least 1e-300)."""
    diff = abs(ctx.fsum(lhs_terms) - ctx.fsum(rhs_terms))
    scale = max([abs(v) for v in (*lhs_terms, *rhs_terms)] + [ctx.mpf("1e-300")])
    return diff / scale


@dataclass(frozen=True)
class LadderData:
    """R_n, r_n for n = 0..n_max, with ``r[0] = 0``."""

    rec: RecurrenceData
    R: tuple
    r: tuple

    @property
    def params(self) -> WeightParams:
        return self.rec.params

    @property
    def n_max(self) -> int:
        return len(self.R) - 1

    def _idx(self, n: int) -> None:
        if not 0 <= n <= self.n_max:
            raise IndexRangeError(f"index {n} outside 0..{self.n_max}")

    def A(self, n: int, x):
        """A_n(x) = R_n / x + (s - R_n) / (x - 1); A_{-1} = 0."""
        if n == -1:
            return self.params.ctx.zero
        self._idx(n)
        s = self.params.mp(self.params.s)
        return self.R[n] / x + (s - self.R[n]) / (x - 1)

    def B(self, n: int, x):
        """B_n(x) = r_n / x - (n + r_n) / (x - 1)."""
        self._idx(n)
        return self.r[n] / x - (n + self.r[n]) / (x - 1)


def ladder_quantities(params: WeightParams, n_max: int, rec: RecurrenceData | None = None) -> LadderData:
    """R_n = (alpha/h_n) int P_n^2 y^(alpha-1)(1-y)^beta e^(-sy) dy, r_n likewise with P_n P_{n-1} / h_{n-1}."""
    params.require_ladder_domain()
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if rec is None or rec.n_max < n_max:
        rec = recurrence_coefficients(params, n_max)
    ctx = params.ctx
    a = params.mp(params.alpha)
    xs, ws = weighted_rule(params, node_count(n_max), shift_alpha=-1)
    table = [rec.polys_at(x, n_max) for x in xs]
    R, r = [], [ctx.zero]
    for n in range(n_max + 1):
        R.append(a / rec.h[n] * ctx.fsum(w * row[n] ** 2 for w, row in zip(ws, table)))
        if n > 0:
            r.append(a / rec.h[n - 1] * ctx.fsum(w * row[n] * row[n - 1] for w, row in zip(ws, table)))
    return LadderData(rec, tuple(R), tuple(r))


def _samples(params: WeightParams, points) -> list:
    pts = [params.mp(Fraction(p)) for p in points]
    for p in pts:
        if p == 0 or p == 1:
            raise DomainError("compatibility sample points must avoid x = 0 and x = 1")
    return pts


def compatibility_residuals(lad: LadderData, n: int, sample_points=DEFAULT_SAMPLE_POINTS):
    """Yield (label, relative residual) for (S1), (S2), (S2') at index n and every sample point."""
    if n < 1 or n + 1 > lad.n_max:
        raise IndexRangeError(f"compatibility at n={n} needs indices n-1..n+1 within 0..{lad.n_max}")
    params, rec = lad.params, lad.rec
    ctx = params.ctx
    an, bn, bn1 = rec.alpha[n], rec.beta[n], rec.beta[n + 1]
    for x in _samples(params, sample_points):
        vp = params.v_prime(x)
        tag = f"n={n} x={ctx.nstr(x, 6)}"
        lhs = [lad.B(n + 1, x), lad.B(n, x)]
        rhs = [x * lad.A(n, x), -an * lad.A(n, x), -vp]
        yield f"S1 {tag}", relative_residual(ctx, lhs, rhs)
        dB = lad.B(n + 1, x) - lad.B(n, x)
        lhs = [ctx.one, x * dB, -an * dB]
        rhs = [bn1 * lad.A(n + 1, x), -bn * lad.A(n - 1, x)]
        yield f"S2 {tag}", relative_residual(ctx, lhs, rhs)
        lhs = [lad.B(n, x) ** 2, vp * lad.B(n, x)] + [lad.A(j, x) for j in range(n)]
        rhs = [bn * lad.A(n, x) * lad.A(n - 1, x)]
        yield f"S2' {tag}", relative_residual(ctx, lhs, rhs)


def check_compatibility(lad: LadderData, n: int, sample_points=DEFAULT_SAMPLE_POINTS,
                        threshold=None) -> VerificationReport:
    params = lad.params
    tr = ResidualTracker(f"ladder.compatibility[n={n}]", params.tolerance if threshold is None else threshold)
    for label, res in compatibility_residuals(lad, n, sample_points):
        tr.add(label, res)
    return tr.report()


def compatibility_suite(lad: LadderData, n_max: int | None = None, sample_points=DEFAULT_SAMPLE_POINTS,
                        threshold=None) -> VerificationReport:
    """(S1), (S2), (S2') for n = 1..n_max (needs ladder data through n_max + 1)."""
    n_max = lad.n_max - 1 if n_max is None else n_max
    params = lad.params
    tr = ResidualTracker(f"ladder.compatibility[{_tag(params)}]",
                         params.tolerance if threshold is None else threshold)
    for n in range(1, n_max + 1):
        for label, res in compatibility_residuals(lad, n, sample_points):
            tr.add(label, res)
    return tr.report()


def string_equation_residuals(lad: LadderData):
    """Yield (label, relative residual) for both string equations over every valid index."""
    params = lad.params
    ctx = params.ctx
    a, b, s = (params.mp(v) for v in (params.alpha, params.beta, params.s))
    R, r = lad.R, lad.r
    for n in range(0, lad.n_max):
        lhs = [s * r[n + 1], s * r[n]]
        rhs = [R[n] ** 2, -(2 * n + 1 + a + b + s) * R[n], s * a]
        yield f"R-equation n={n}", relative_residual(ctx, lhs, rhs)
    for n in range(1, lad.n_max + 1):
        bracket = s * s / (R[n] * R[n - 1]) - s / R[n] - s / R[n - 1]
        lhs = [n * (n + b), (2 * n + a + b) * r[n]]
        rhs = [r[n] ** 2 * bracket, -a * r[n] * bracket]
        yield f"r-equation n={n}", relative_residual(ctx, lhs, rhs)


def check_string_equations(lad: LadderData, threshold=None) -> VerificationReport:
    """R-equation for 0 <= n < n_max (uses r_{n+1}); r-equation for 1 <= n <= n_max (uses R_{n-1})."""
    params = lad.params
    tr = ResidualTracker(f"ladder.string_equations[{_tag(params)}]",
                         params.tolerance if threshold is None else threshold)
    for label, res in string_equation_residuals(lad):
        tr.add(label, res)
    return tr.report()


@dataclass(frozen=True)
class XYSequence:
    """x_n = 1/s - 1/R_{n-1}, y_n = -r_n for n = 1..n_max; ``y0 = -r_0 = 0``."""

    params: WeightParams
    x: dict
    y: dict
    y0: object

    @property
    def n_max(self) -> int:
        return max(self.x)


def xy_sequence(lad: LadderData, n_max: int | None = None) -> XYSequence:
    params = lad.params
    params.require_ladder_domain()
    n_max = lad.n_max if n_max is None else n_max
    if n_max > lad.n_max:
        raise IndexRangeError(f"x_{n_max} needs ladder data through {n_max}")
    s = params.mp(params.s)
    xs, ys = {}, {}
    for n in range(1, n_max + 1):
        if lad.R[n - 1] == 0:
            raise SingularStepError("x_n = 1/s - 1/R_{n-1}", "R_{n-1}", n)
        xs[n] = 1 / s - 1 / lad.R[n - 1]
        ys[n] = -lad.r[n]
    return XYSequence(params, xs, ys, -lad.r[0])


def xy_recurrence_residuals(seq: XYSequence):
    """Residuals of both lines of the (x_n, y_n) recurrence, computed from the formulas directly.

    Line 2 at n = 1 uses the boundary value y_0 = 0.
    """
    params = seq.params
    ctx = params.ctx
    a, b, s = (params.mp(v) for v in (params.alpha, params.beta, params.s))
    x, y = seq.x, dict(seq.y)
    y[0] = seq.y0
    for n in range(1, seq.n_max):
        den = s * s * (y[n] ** 2 + a * y[n])
        if den == 0:
            raise SingularStepError("xy line 1", "y_n (y_n + alpha)", n)
        rhs = [y[n] ** 2, -(2 * n + b) * y[n], n * (n + b)]
        yield f"xy line 1 n={n}", relative_residual(ctx, [x[n] * x[n + 1] * den], rhs)
    for n in range(1, seq.n_max + 1):
        q = 1 - s * x[n]
        lhs = [(y[n] + y[n - 1]) * q * q]
        rhs = [-a * s * s * x[n] ** 2, -s * (2 * n - 1 - a + b + s) * x[n], 2 * n + b - 1]
        yield f"xy line 2 n={n}", relative_residual(ctx, lhs, rhs)


def check_xy_recurrence(seq: XYSequence, threshold=None) -> VerificationReport:
    params = seq.params
    tr = ResidualTracker(f"ladder.xy_recurrence[{_tag(params)}]",
                         params.tolerance if threshold is None else threshold)
    for label, res in xy_recurrence_residuals(seq):
        tr.add(label, res)
    return tr.report()


def _tag(params: WeightParams) -> str:
    return f"alpha={params.alpha},beta={params.beta},s={params.s},p={params.precision}"
