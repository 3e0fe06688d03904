# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
import logging
import math

import mpmath
import numpy as np
import pytest

import zetafast as zf
from zetafast.scanner import scan_grid

FIRST_ZEROS = (14.134725141734693, 21.022039638771555, 25.010857580145688)


def theta_asymptotic(t):
    return t / 2 * math.log(t / (2 * math.pi)) - t / 2 - math.pi / 8 + 1 / (48 * t)


def test_theta_matches_asymptotic_expansion():
    assert abs(zf.rs_theta(500.0) - theta_asymptotic(500.0)) < 1e-3


def test_theta_matches_mpmath():
    for t in (0.5, 7.0, 123.4):
        assert zf.rs_theta(t) == pytest.approx(float(mpmath.siegeltheta(t)), abs=1e-12)


def test_theta_is_continuous_and_increasing_beyond_ten():
    t = np.linspace(10, 1000, 5000)
    values = np.array([zf.rs_theta(x) for x in t])
    steps = np.diff(values)
    assert (steps > 0).all()
    # the derivative is log(t / 2 pi) / 2, so no jumps by multiples of pi
    assert steps.max() < 0.5 * math.log(1000 / (2 * math.pi)) * (t[1] - t[0]) * 1.01


@pytest.mark.parametrize('t', [0.0, -1.0, math.inf])
def test_theta_requires_positive_t(t):
    with pytest.raises(zf.DomainError):
        zf.rs_theta(t)


def test_hardy_z_sign():
    assert zf.hardy_z(5.0) < 0
    assert zf.hardy_z(20.0) > 0


def test_hardy_z_matches_mpmath():
    for t in (3.0, 33.3, 150.0):
        assert zf.hardy_z(t, 1e-10) == pytest.approx(
            float(mpmath.siegelz(t)), abs=1e-9
        )


def test_hardy_z_vanishes_at_first_zero():
    assert abs(zf.hardy_z(FIRST_ZEROS[0], 1e-10)) < 1e-8


def test_hardy_z_imaginary_residual_is_small():
    assert abs(zf.hardy_z_complex(30.0, 1e-10).imag) < 1e-9


def test_hardy_z_warns_on_large_imaginary_residual(caplog):
    options = zf.Options(precision='hardware')
    with caplog.at_level(logging.WARNING, logger='zetafast'):
        zf.hardy_z(40.0, 1e-18, options=options)
    assert 'imaginary residual' in caplog.text


def test_hardy_z_with_oracle_engine():
    assert zf.hardy_z(40.0, engine='oracle') == pytest.approx(
        zf.hardy_z(40.0, 1e-10), abs=1e-9
    )


def test_scan_grid():
    grid = scan_grid(0.0, 1.0, 0.25)
    np.testing.assert_allclose(grid, [0.25, 0.5, 0.75, 1.0])
    grid = scan_grid(10.0, 11.0, 0.15)
    assert grid[0] == 10.0
    assert grid[-1] == 11.0
    assert np.diff(grid).max() <= 0.15


@pytest.mark.parametrize(
    ('t0', 't1', 'step'),
    [(-1.0, 5.0, 0.1), (5.0, 5.0, 0.1), (6.0, 5.0, 0.1), (1.0, 5.0, 0.0), (1.0, 5.0, 0.3)],
)
def test_scan_grid_rejects_invalid_arguments(t0, t1, step):
    with pytest.raises(zf.DomainError):
        scan_grid(t0, t1, step)


def test_zero_bracket_validation():
    bracket = zf.ZeroBracket(1.0, 2.0, -0.5, 0.25)
    assert bracket.t_lo < bracket.t_hi
    with pytest.raises(zf.DomainError):
        zf.ZeroBracket(2.0, 1.0, -0.5, 0.25)
    with pytest.raises(zf.DomainError):
        zf.ZeroBracket(1.0, 2.0, 0.5, 0.25)


def test_find_first_zeros():
    zeros = zf.find_zeros(10.0, 26.0)
    assert len(zeros) == 3
    for (bracket, t), expected in zip(zeros, FIRST_ZEROS, strict=True):
        assert bracket.t_lo <= t <= bracket.t_hi
        assert bracket.t_hi - bracket.t_lo <= 0.05 + 1e-12
        assert t == pytest.approx(expected, abs=1e-7)


def test_counts_zeros_up_to_one_hundred():
    zeros = zf.find_zeros(0.0, 100.0, grid_step=0.1)
    assert len(zeros) == 29
    t = [zero for _, zero in zeros]
    assert t == sorted(t)


def test_zero_count_matches_backlund_estimate():
    zeros = zf.find_zeros(100.0, 150.0, grid_step=0.1)
    # N(150) - N(100) from the counting function with S(t) ignored
    expected = (zf.rs_theta(150.0) - zf.rs_theta(100.0)) / math.pi
    assert abs(len(zeros) - expected) < 3


def test_workers_do_not_change_result():
    sequential = zf.find_zeros(14.0, 26.0)
    parallel = zf.find_zeros(14.0, 26.0, workers=4)
    assert sequential == parallel


def test_oracle_engine_finds_same_zeros():
    ours = zf.find_zeros(14.0, 26.0, grid_step=0.1)
    oracle = zf.find_zeros(14.0, 26.0, grid_step=0.1, engine=zf.Engine.oracle)
    assert len(ours) == len(oracle) == 3
    for (_, a), (_, b) in zip(ours, oracle, strict=True):
        assert a == pytest.approx(b, abs=1e-7)


def test_empty_interval_has_no_zeros():
    assert zf.find_zeros(1.0, 10.0) == []
