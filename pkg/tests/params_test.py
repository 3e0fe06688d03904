# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
import math

import numpy as np
import pytest

import zetafast as zf
from zetafast.params import order_equation_residual


def test_solve_v_closed_form_for_sigma_above_one():
    assert math.isclose(zf.solve_x0(1.0, 10.0, 0.05), math.log(160), abs_tol=1e-9)
    assert zf.solve_v(1.0, 10.0, 0.05) == 6


def test_solve_v_at_origin():
    x0 = zf.solve_x0(0.0, 0.0, 0.05)
    assert x0 == pytest.approx(6.012, abs=1e-3)
    assert zf.solve_v(0.0, 0.0, 0.05) == 7


def test_solve_v_is_monotonic_in_tau():
    for sigma in (0.0, 0.5, 1.0):
        assert zf.solve_v(sigma, 1e4, 1e-6) >= zf.solve_v(sigma, 10.0, 1e-6)


@pytest.mark.parametrize('delta', [0.0, -1e-3, math.nan, math.inf, 0.06])
def test_solve_v_rejects_invalid_accuracy(delta):
    with pytest.raises(zf.InvalidAccuracyError):
        zf.solve_v(0.5, 10.0, delta)


def test_solve_v_rejects_negative_tau():
    with pytest.raises(zf.DomainError):
        zf.solve_v(0.5, -1.0, 1e-3)


def test_heuristic_accuracy_above_certified_limit_is_accepted():
    assert zf.solve_v(0.5, 10.0, 1.0, zf.Mode.heuristic) == 5


def test_order_equation_residual_at_root_and_sandwich():
    rng = np.random.default_rng(seed=42)
    for _ in range(100):
        sigma = rng.uniform(0, 2)
        tau = rng.uniform(0, 1e5)
        delta = 10.0 ** rng.uniform(-12, -1.5)
        x0 = zf.solve_x0(sigma, tau, delta)
        assert abs(order_equation_residual(x0, sigma, tau, delta)) <= 1e-9
        v = zf.solve_v(sigma, tau, delta)
        assert 0 <= order_equation_residual(v, sigma, tau, delta) <= 1
        assert v >= 5


def test_derive_params_smoothing_scale():
    params = zf.derive_params(1.0, 0.0, 0.05)
    assert params.v == 6
    assert params.N == pytest.approx(1.11 * math.sqrt(1 + 0.5 / 6))
    assert params.N == pytest.approx(1.1553, abs=1e-4)
    assert params.M == 2
    assert params.lambda_ == 3.151
    assert params.certified


def test_derive_params_at_larger_tau():
    params = zf.derive_params(1.0, 99.5, 0.05)
    assert params.v == 6
    assert params.N == pytest.approx(1.11 * math.sqrt(1 + 100 / 6))
    assert params.M == 5


def test_derive_params_main_sum_cutoff():
    params = zf.derive_params(0.5, 1000.0, 1e-6)
    assert params.d_cutoff == math.ceil(3.151 * params.v * params.N)
    assert params.summand_count() == params.d_cutoff + (params.v + 1) * params.M
    assert params.summand_count(correction_series=2) == params.d_cutoff + 2 * (
        params.v + 1
    ) * params.M


@pytest.mark.parametrize('sigma', [-0.5, 2.5])
def test_derive_params_outside_strip_is_not_certified(sigma):
    params = zf.derive_params(sigma, 10.0, 1e-3)
    assert not params.certified


def test_heuristic_params_raise_order_above_sigma():
    params = zf.derive_params(12.5, 0.0, 0.5, zf.Mode.heuristic)
    assert params.v >= 14
    assert not params.certified


def test_eval_params_invariants():
    with pytest.raises(zf.DomainError):
        zf.EvalParams(v=4, N=2.0, M=2, delta=1e-3, certified=False)
    with pytest.raises(zf.DomainError):
        zf.EvalParams(v=5, N=1.0, M=2, delta=1e-3, certified=False)
    with pytest.raises(zf.DomainError):
        zf.EvalParams(v=5, N=2.5, M=2, delta=1e-3, certified=False)


def test_l_params_scale_with_modulus():
    zeta_params = zf.derive_params(0.5, 50.0, 1e-6)
    l_params = zf.derive_l_params(0.5, 50.0, 1e-6, 5)
    assert not l_params.certified
    assert l_params.v >= zeta_params.v
    assert l_params.N == pytest.approx(
        1.11 * math.sqrt(5 * (1 + 50.5 / l_params.v))
    )
    assert l_params.M == math.ceil(l_params.N)


@pytest.mark.parametrize(
    ('tau', 'delta', 'expected'),
    [(100.0, 0.05, True), (10.0, 0.05, False), (0.0, 0.05, False)],
)
def test_speed_precondition(tau, delta, expected):
    assert zf.speed_precondition(tau, delta) is expected


def test_speed_precondition_implies_tau_above_order():
    for tau in (20.0, 100.0, 1e4):
        for delta in (0.05, 1e-3, 1e-9):
            if zf.speed_precondition(tau, delta):
                assert tau > 0.5 + zf.solve_v(0.0, tau, delta)


def test_summand_bound_values():
    assert zf.summand_bound(0.5, 1000.0, 0.05) == pytest.approx(716.3, rel=1e-3)
    assert zf.summand_bound(2.0, 1000.0, 0.05) == pytest.approx(625.5, rel=1e-3)


def test_summand_bound_monotonic_in_sigma():
    values = [zf.summand_bound(sigma, 1000.0, 1e-6) for sigma in np.linspace(0, 2, 9)]
    assert all(a >= b for a, b in zip(values, values[1:], strict=False))
    assert values[4] == values[-1]


def test_summand_bound_requires_precondition():
    with pytest.raises(zf.PreconditionError):
        zf.summand_bound(0.5, 10.0, 0.05)


def test_requested_evaluation_validates_certified_requests():
    request = zf.RequestedEvaluation(complex(0.5, 3.0), 1e-3)
    assert request.sigma == 0.5
    assert request.tau == 3.0
    with pytest.raises(zf.DomainError):
        zf.RequestedEvaluation(complex(3.0, 1.0), 1e-3)
    with pytest.raises(zf.InvalidAccuracyError):
        zf.RequestedEvaluation(complex(0.5, 1.0), 0.1)
    zf.RequestedEvaluation(complex(3.0, 1.0), 0.1, zf.Mode.heuristic)
