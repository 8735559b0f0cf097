from dataclasses import replace
from fractions import Fraction as Q

import mpmath
import pytest

from d5jacobi.errors import DomainError, IndexRangeError
from d5jacobi.opcore import (
    LadderData,
    WeightParams,
    check_compatibility,
    check_string_equations,
    check_xy_recurrence,
    compatibility_suite,
    gauss_jacobi01,
    ladder_quantities,
    moment,
    recurrence_coefficients,
    xy_sequence,
)
from d5jacobi.opcore.checks import classical_regression, precision_scaling
from d5jacobi.opcore.hankel import exact_jacobi_moments, hankel_det, hankel_recurrence, legendre01_beta
from d5jacobi.opcore.ladder import relative_residual
from d5jacobi.opcore.quadrature import to_mpf
from d5jacobi.painleve import RecOrbitState, rec_step_forward


def close(x, y, digits=40):
    return abs(x - y) <= mpmath.mpf(10) ** (-digits) * max(1, abs(y))


# --- quadrature


@pytest.mark.parametrize("a,b", [(0, 0), (Q(1, 2), Q(-1, 2)), (Q(3, 2), 2)])
def test_gauss_jacobi_integrates_monomials(a, b):
    xs, ws = gauss_jacobi01(12, a, b, 50)
    ctx = xs[0].context
    assert all(0 < x < 1 for x in xs)
    for k in range(0, 2 * 12):
        exact = ctx.beta(k + to_mpf(ctx, a) + 1, to_mpf(ctx, b) + 1)
        assert abs(ctx.fsum(w * x ** k for x, w in zip(xs, ws)) - exact) < ctx.mpf(10) ** -45 * exact


def test_weights_are_positive():
    xs, ws = gauss_jacobi01(30, Q(1, 2), 2, 40)
    assert all(w > 0 for w in ws)


# --- moments (closed-form oracles)


def test_moments_of_uniform_weight():
    p = WeightParams.of(0, 0, 0, 50)
    for k in range(8):
        assert close(moment(k, p), p.mp(Q(1, k + 1)))


def test_moment_with_exponential():
    p = WeightParams.of(0, 0, 1, 50)
    with mpmath.workdps(60):
        oracle = 1 - mpmath.exp(-1)
    assert close(moment(0, p), oracle)


def test_moment_beta_two_two():
    p = WeightParams.of(1, 1, 0, 50)
    assert close(moment(0, p), p.mp(Q(1, 6)))


@pytest.mark.parametrize("k", [0, 1, 5])
def test_moment_matches_confluent_hypergeometric(k):
    # mu_k = B(k + a + 1, b + 1) 1F1(k + a + 1; k + a + b + 2; -s)
    p = WeightParams.of("1.5", "0.5", "2", 50)
    with mpmath.workdps(60):
        a, b, s = mpmath.mpf("1.5"), mpmath.mpf("0.5"), mpmath.mpf(2)
        oracle = mpmath.beta(k + a + 1, b + 1) * mpmath.hyp1f1(k + a + 1, k + a + b + 2, -s)
    assert close(moment(k, p), oracle)


def test_float_parameters_rejected():
    with pytest.raises(TypeError):
        WeightParams(1.5, 0.5, 1.0)


def test_parameter_domain():
    with pytest.raises(DomainError):
        WeightParams.of(-1, 0, 1)
    with pytest.raises(DomainError):
        WeightParams.of(1, 1, -1)


# --- recurrence coefficients


def test_hankel_oracle_legendre():
    _, alpha, beta, _ = hankel_recurrence(exact_jacobi_moments(22, 0, 0), 10)
    assert beta[1] == Q(1, 12)
    assert beta[2] == Q(1, 15)
    assert beta[1:] == [legendre01_beta(n) for n in range(1, 11)]
    assert alpha == [Q(1, 2)] * 11


def test_hankel_det_small():
    mu = exact_jacobi_moments(4, 0, 0)
    assert hankel_det(mu, 1) == 1
    assert hankel_det(mu, 2) == Q(1, 3) - Q(1, 4)


def test_stieltjes_matches_hankel_for_integer_exponents():
    n_max = 8
    params = WeightParams.of(1, 2, 0, 60)
    rec = recurrence_coefficients(params, n_max)
    h, alpha, beta, p = hankel_recurrence(exact_jacobi_moments(2 * n_max + 2, 1, 2), n_max)
    for n in range(n_max + 1):
        assert close(rec.h[n], params.mp(h[n]), 50)
        assert close(rec.alpha[n], params.mp(alpha[n]), 50)
        assert close(rec.beta[n], params.mp(beta[n]), 50)
        assert close(rec.p[n], params.mp(p[n]), 50)


def test_classical_betas():
    p = WeightParams.of(0, 0, 0, 60)
    rec = recurrence_coefficients(p, 5)
    assert close(rec.beta[1], p.mp(Q(1, 12)), 50)
    assert close(rec.beta[2], p.mp(Q(1, 15)), 50)


def test_classical_regression_report():
    rep = classical_regression(10, 60)
    assert rep.passed
    assert rep.threshold == "1.0e-40"


def test_recurrence_identities(base_params):
    rec = recurrence_coefficients(base_params, 20)
    ctx = base_params.ctx
    assert close(rec.alpha[0], moment(1, base_params) / moment(0, base_params), 50)
    assert all(h > 0 for h in rec.h)
    for n in range(20):
        assert close(rec.alpha[n], rec.p[n] - rec.p[n + 1], 50)
    for n in range(1, 21):
        assert rec.beta[n] > 0
        assert close(rec.beta[n], rec.h[n] / rec.h[n - 1], 50)
    assert rec.orthogonality_residual < ctx.mpf(10) ** -50


# --- ladder quantities


def test_ladder_domain_restrictions():
    with pytest.raises(DomainError):
        ladder_quantities(WeightParams.of(0, 1, 1), 3)
    with pytest.raises(DomainError):
        ladder_quantities(WeightParams.of(1, 1, 0), 3)


def test_ladder_basic_values(base_ladder, base_params):
    assert base_ladder.r[0] == 0
    s = base_params.mp(base_params.s)
    for n in (0, 3, 10):
        for x in (base_params.mp(Q(-1)), base_params.mp(Q(1, 3)), base_params.mp(4)):
            # x (x - 1) A_n(x) is linear with leading coefficient s
            assert close(x * (x - 1) * base_ladder.A(n, x), s * x - base_ladder.R[n], 50)
    assert base_ladder.A(-1, base_params.mp(2)) == 0
    with pytest.raises(IndexRangeError):
        base_ladder.B(99, base_params.mp(2))


def test_compatibility_at_n3(base_ladder):
    rep = check_compatibility(base_ladder, 3, sample_points=(-1, Q(1, 2), 2))
    assert rep.passed
    assert rep.samples == 9


def test_compatibility_suite(base_ladder):
    rep = compatibility_suite(base_ladder, 20)
    assert rep.passed
    assert mpmath.mpf(rep.max_residual) < mpmath.mpf(10) ** -30


def test_compatibility_needs_neighbours(base_ladder):
    with pytest.raises(IndexRangeError):
        check_compatibility(base_ladder, 0)
    with pytest.raises(IndexRangeError):
        check_compatibility(base_ladder, 21)


def test_compatibility_sample_points_avoid_poles(base_ladder):
    with pytest.raises(DomainError):
        check_compatibility(base_ladder, 2, sample_points=(0, 2))


def test_corrupted_beta_fails_s2_prime(base_ladder):
    rec = base_ladder.rec
    n = 4
    beta = list(rec.beta)
    beta[n] = beta[n] * rec.params.mp("1.01")
    bad = LadderData(replace(rec, beta=tuple(beta)), base_ladder.R, base_ladder.r)
    rep = check_compatibility(bad, n)
    assert not rep.passed
    failing = {d["item"].split()[0] for d in rep.details if not d["passed"]}
    assert "S2'" in failing


def test_string_equations(base_ladder):
    rep = check_string_equations(base_ladder)
    assert rep.passed
    items = [d["item"] for d in rep.details]
    assert "R-equation n=0" in items and "r-equation n=1" in items


def test_relative_residual_scale(base_params):
    ctx = base_params.ctx
    assert relative_residual(ctx, [ctx.mpf(2)], [ctx.mpf(1), ctx.mpf(1)]) == 0
    assert relative_residual(ctx, [ctx.mpf(3)], [ctx.mpf(1)]) == ctx.mpf(2) / 3


def test_xy_sequence_and_recurrence(base_ladder, base_params):
    seq = xy_sequence(base_ladder)
    assert seq.y[1] == -base_ladder.r[1]
    assert seq.y0 == 0
    assert check_xy_recurrence(seq).passed


def test_handoff_to_recurrence_stepping(base_ladder, base_params):
    seq = xy_sequence(base_ladder)
    al, be, s = (base_params.mp(v) for v in (base_params.alpha, base_params.beta, base_params.s))
    state = RecOrbitState(al, be, s, 1, seq.x[1], seq.y[1])
    for n in range(1, 6):
        state = rec_step_forward(state)
        assert state.n == n + 1
        assert close(state.x, seq.x[n + 1], 30)
        assert close(state.y, seq.y[n + 1], 30)


def test_precision_scaling(base_params):
    rep = precision_scaling(base_params, n_max=8)
    assert rep.passed
    assert float(rep.details[0]["orders_gained"]) >= 10
