"""Exact-rational Hankel determinant route to recurrence coefficients.

Only usable where the moments are rational, i.e. s = 0 with integer
exponents; it serves as an independent oracle for the Stieltjes route.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial


def exact_jacobi_moments(count: int, alpha: int, beta: int) -> list[Fraction]:
    """mu_k = B(k+alpha+1, beta+1) for s = 0 and non-negative integer exponents."""
    if alpha < 0 or beta < 0 or int(alpha) != alpha or int(beta) != beta:
        raise ValueError("exact moments need non-negative integer alpha, beta")
    alpha, beta = int(alpha), int(beta)
    return [Fraction(factorial(k + alpha) * factorial(beta), factorial(k + alpha + beta + 1)) for k in range(count)]


def exact_det(rows: list[list[Fraction]]) -> Fraction:
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for j in range(c, n):
                    m[r][j] -= f * m[c][j]
    return det


def hankel_det(mu: list[Fraction], n: int) -> Fraction:
    """D_n = det[mu_{i+j}]_{i,j<n}, with D_0 = 1."""
    if n == 0:
        return Fraction(1)
    return exact_det([[mu[i + j] for j in range(n)] for i in range(n)])


def _shifted_det(mu: list[Fraction], n: int) -> Fraction:
    # D_n with its last column replaced by mu_{i+n}
    if n == 0:
        return Fraction(0)
    return exact_det([[mu[i + j] for j in range(n - 1)] + [mu[i + n]] for i in range(n)])


def hankel_recurrence(mu: list[Fraction], n_max: int):
    """(h, alpha, beta, p) for n = 0..n_max from exact moments (needs 2 n_max + 2 moments)."""
    if len(mu) < 2 * n_max + 2:
        raise ValueError(f"need {2 * n_max + 2} moments, got {len(mu)}")
    D = [hankel_det(mu, n) for n in range(n_max + 2)]
    p = [-_shifted_det(mu, n) / D[n] for n in range(n_max + 2)]
    h = [D[n + 1] / D[n] for n in range(n_max + 1)]
    beta = [Fraction(0)] + [D[n + 1] * D[n - 1] / D[n] ** 2 for n in range(1, n_max + 1)]
    alpha = [p[n] - p[n + 1] for n in range(n_max + 1)]
    return h, alpha, beta, p[: n_max + 1]


def legendre01_beta(n: int) -> Fraction:
    """Closed form beta_n = n^2 / (4 (4 n^2 - 1)) for the uniform weight on [0, 1]."""
    return Fraction(n * n, 4 * (4 * n * n - 1))
