"""Moments and monic recurrence coefficients by the discretised Stieltjes procedure."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import PrecisionExhaustedError
from .quadrature import gauss_jacobi01
from .weight import WeightParams

NODE_SURPLUS = 64


def node_count(n_max: int) -> int:
    return 2 * n_max + NODE_SURPLUS


def weighted_rule(params: WeightParams, n_nodes: int, shift_alpha: int = 0):
    """Nodes and weights absorbing x^(alpha+shift) (1-x)^beta, times exp(-s x)."""
    ctx = params.ctx
    xs, ws = gauss_jacobi01(n_nodes, params.alpha + shift_alpha, params.beta, params.precision)
    s = params.mp(params.s)
    return xs, [w * ctx.exp(-s * x) for x, w in zip(xs, ws)]


def moment(k: int, params: WeightParams):
    """mu_k = int_0^1 x^(k+alpha) (1-x)^beta exp(-s x) dx."""
    if k < 0:
        raise ValueError("moment order must be >= 0")
    xs, ws = weighted_rule(params, node_count(k // 2 + 1))
    return params.ctx.fsum(w * x ** k for x, w in zip(xs, ws))


@dataclass(frozen=True)
class RecurrenceData:
    """Monic recurrence data for n = 0..n_max.

    ``alpha[n]``, ``beta[n]`` satisfy x P_n = P_{n+1} + alpha_n P_n + beta_n P_{n-1}
    with ``beta[0] = 0``; ``p[n]`` is the coefficient of x^(n-1) in P_n and
    ``h[n]`` the squared norm.
    """

    params: WeightParams
    n_max: int
    h: tuple
    alpha: tuple
    beta: tuple
    p: tuple
    orthogonality_residual: object

    def polys_at(self, x, upto: int | None = None) -> list:
        """[P_0(x), ..., P_upto(x)] by the recurrence."""
        upto = self.n_max if upto is None else upto
        if upto > self.n_max + 1:
            raise IndexError(f"P_{upto} needs coefficients beyond n_max={self.n_max}")
        vals = [self.params.ctx.one]
        prev = self.params.ctx.zero
        for n in range(upto):
            vals.append((x - self.alpha[n]) * vals[-1] - self.beta[n] * prev)
            prev = vals[-2]
        return vals


def _orthogonality_check(ctx, xs, ws, table, h, n_max):
    """Worst |sum w P_m P_n| / sqrt(h_m h_n) over a subsample of pairs m < n."""
    idx = sorted({0, 1, n_max // 2, max(n_max - 1, 0), n_max})
    worst = ctx.zero
    for i, m in enumerate(idx):
        for n in idx[i + 1:]:
            val = ctx.fsum(w * pm * pn for w, pm, pn in zip(ws, table[m], table[n]))
            worst = max(worst, abs(val) / ctx.sqrt(h[m] * h[n]))
    return worst


def recurrence_coefficients(params: WeightParams, n_max: int) -> RecurrenceData:
    """Stieltjes procedure on a Gauss-Jacobi discretisation with 2 n_max + 64 nodes."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ctx = params.ctx
    xs, ws = weighted_rule(params, node_count(n_max))
    h, al, be, p = [], [], [ctx.zero], [ctx.zero]
    prev = [ctx.zero] * len(xs)
    cur = [ctx.one] * len(xs)
    table = [cur]
    for n in range(n_max + 1):
        hn = ctx.fsum(w * c * c for w, c in zip(ws, cur))
        if hn <= 0:
            raise PrecisionExhaustedError(f"non-positive norm h_{n}")
        an = ctx.fsum(w * x * c * c for w, x, c in zip(ws, xs, cur)) / hn
        h.append(hn)
        al.append(an)
        if n > 0:
            be.append(hn / h[n - 1])
        p.append(p[n] - an)
        if n < n_max:
            prev, cur = cur, [(x - an) * c - be[n] * q for x, c, q in zip(xs, cur, prev)]
            table.append(cur)
    resid = _orthogonality_check(ctx, xs, ws, table, h, n_max)
    if resid > params.tolerance:
        raise PrecisionExhaustedError(
            f"orthogonality residual {ctx.nstr(resid, 5)} exceeds 10^-{params.precision // 2}; "
            "increase the working precision")
    return RecurrenceData(params, n_max, tuple(h), tuple(al), tuple(be), tuple(p[: n_max + 1]), resid)
