"""Gauss-Jacobi rules on [0, 1] in arbitrary precision.

Nodes are seeded from a double-precision Golub-Welsch eigenvalue solve and
refined by Newton's method on the monic three-term recurrence in the target
precision; weights come from the Christoffel function.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np

from ..errors import PrecisionExhaustedError


def make_context(digits: int) -> mpmath.MPContext:
    """A private mpmath context; numbers created from it keep ``digits`` of precision."""
    ctx = mpmath.MPContext()
    ctx.dps = int(digits)
    return ctx


def to_mpf(ctx, value):
    """Exact conversion of int / Fraction / decimal string into ``ctx``."""
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    if isinstance(value, str):
        return to_mpf(ctx, Fraction(value))
    return ctx.mpf(value)


def jacobi01_recurrence(ctx, n: int, a, b):
    """Monic recurrence coefficients (alpha_k, beta_k), k < n, for x^a (1-x)^b on [0, 1].

    ``beta_0`` is returned as the total mass B(a+1, b+1).
    """
    # Shifted from the classical [-1, 1] formulas with (1-x)^b (1+x)^a.
    A, B = b, a
    al, be = [], []
    for k in range(n):
        if k == 0:
            c = (B - A) / (A + B + 2)
            be.append(ctx.beta(a + 1, b + 1))
        else:
            s = 2 * k + A + B
            c = (B * B - A * A) / (s * (s + 2))
            if k == 1:
                be.append(4 * (A + 1) * (B + 1) / ((A + B + 2) ** 2 * (A + B + 3)) / 4)
            else:
                be.append(4 * k * (k + A) * (k + B) * (k + A + B) / (s * s * (s + 1) * (s - 1)) / 4)
        al.append((c + 1) / 2)
    return al, be


def _seed_nodes(al, be) -> np.ndarray:
    d = np.array([float(x) for x in al])
    e = np.sqrt(np.array([float(x) for x in be[1:]]))
    jac = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    return np.sort(np.linalg.eigvalsh(jac))


@lru_cache(maxsize=64)
def _gauss_jacobi01_cached(n: int, a: Fraction, b: Fraction, digits: int):
    ctx = make_context(digits)
    am, bm = to_mpf(ctx, a), to_mpf(ctx, b)
    al, be = jacobi01_recurrence(ctx, n + 1, am, bm)
    seeds = _seed_nodes(al[:n], be[:n])
    tol = ctx.mpf(10) ** (-digits + 3)
    nodes, weights = [], []
    for x0 in seeds:
        x = ctx.mpf(float(x0))
        for _ in range(60):
            p0, p1 = ctx.zero, ctx.one
            d0, d1 = ctx.zero, ctx.zero
            for k in range(n):
                bk = be[k] if k else 0
                p0, p1, d0, d1 = p1, (x - al[k]) * p1 - bk * p0, d1, p1 + (x - al[k]) * d1 - bk * d0
            dx = p1 / d1
            x -= dx
            if abs(dx) < tol:
                break
        else:
            raise PrecisionExhaustedError(f"Newton refinement of Gauss-Jacobi node near {x0} did not converge")
        # Christoffel weight 1 / sum_k P_k(x)^2 / h_k
        p0, p1 = ctx.zero, ctx.one
        h = be[0]
        acc = 1 / h
        for k in range(n - 1):
            bk = be[k] if k else 0
            p0, p1 = p1, (x - al[k]) * p1 - bk * p0
            h = h * be[k + 1]
            acc += p1 * p1 / h
        nodes.append(x)
        weights.append(1 / acc)
    for u, v in zip(nodes, nodes[1:]):
        if not u < v:
            raise PrecisionExhaustedError("Gauss-Jacobi nodes collided during refinement")
    return tuple(nodes), tuple(weights)


def gauss_jacobi01(n: int, a, b, digits: int):
    """n-point Gauss rule for the weight x^a (1-x)^b on [0, 1].

    ``a`` and ``b`` are exact (int, Fraction or decimal string).  Returns
    ``(nodes, weights)`` as tuples of mpf in a context of ``digits`` digits.
    """
    a, b = Fraction(a), Fraction(b)
    if a <= -1 or b <= -1:
        raise ValueError("Jacobi exponents must exceed -1")
    if n < 1:
        raise ValueError("need at least one node")
    return _gauss_jacobi01_cached(int(n), a, b, int(digits))
