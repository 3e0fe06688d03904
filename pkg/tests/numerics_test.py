# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
import cmath
import math

import mpmath
import numpy as np
import pytest

import zetafast as zf
from zetafast.core import extended_backend, hardware_backend, q_cutoff_array
from zetafast.testing import assert_close


def test_principal_log_of_negative_one_has_positive_argument():
    assert_close(zf.principal_log(-1), 1j * math.pi)


def test_principal_log_of_negative_zero_imaginary_part():
    assert_close(zf.principal_log(complex(-2.0, -0.0)), math.log(2) + 1j * math.pi)


@pytest.mark.parametrize('z', [1 + 1j, -3 - 4j, 0.5j, 1e-300 + 0j])
def test_principal_log_matches_cmath(z):
    assert_close(zf.principal_log(z), cmath.log(z))


def test_principal_log_of_zero_raises():
    with pytest.raises(zf.DomainError):
        zf.principal_log(0)


@pytest.mark.parametrize('z', [math.nan, complex(math.inf, 0), 'abc'])
def test_principal_log_rejects_invalid_input(z):
    with pytest.raises(zf.DomainError):
        zf.principal_log(z)


def test_complex_pow_uses_principal_branch():
    assert_close(zf.complex_pow(-1, 0.5), 1j, atol=1e-15)


def test_complex_pow_of_zero():
    assert zf.complex_pow(0, 3) == 0
    with pytest.raises(zf.DomainError):
        zf.complex_pow(0, 0.5j)


@pytest.mark.parametrize('z', [0.5, 3 + 4j, 0.25 + 500j, -2.5 + 0.1j, 1e-3 - 20j])
def test_log_gamma_matches_mpmath(z):
    assert_close(zf.log_gamma(z), complex(mpmath.loggamma(z)), rtol=1e-13, atol=1e-13)


def test_log_gamma_is_continuous_along_vertical_line():
    t = np.linspace(1, 200, 2000)
    values = np.array([zf.log_gamma(complex(0.25, x)).imag for x in t])
    assert np.all(np.abs(np.diff(values)) < math.pi / 2)


def random_points(n, *, seed, re=(0.1, 20.0), im=(-50.0, 50.0)):
    rng = np.random.default_rng(seed=seed)
    return [complex(x, y) for x, y in zip(rng.uniform(*re, n), rng.uniform(*im, n))]


def test_log_gamma_satisfies_recurrence():
    for z in random_points(100, seed=1):
        ratio = cmath.exp(zf.log_gamma(z + 1) - zf.log_gamma(z))
        assert_close(ratio, z, rtol=1e-12, context=z)


def test_log_gamma_satisfies_reflection_formula_up_to_branch():
    for z in random_points(100, seed=2, re=(-5.0, 5.0), im=(0.1, 5.0)):
        difference = (
            zf.log_gamma(z)
            + zf.log_gamma(1 - z)
            - cmath.log(math.pi / cmath.sin(math.pi * z))
        )
        turns = difference.imag / (2 * math.pi)
        assert abs(difference.real) < 1e-11, z
        assert abs(turns - round(turns)) < 1e-11, z


def test_digamma_is_derivative_of_log_gamma():
    h = 1e-6
    for z in random_points(100, seed=3, re=(0.5, 10.0), im=(-10.0, 10.0)):
        numeric = (zf.log_gamma(z + h) - zf.log_gamma(z - h)) / (2 * h)
        psi = zf.digamma(z)
        assert abs(numeric - psi) <= 1e-8 * max(1.0, abs(psi)), z


@pytest.mark.parametrize('z', [0, -1, -7])
def test_gamma_family_raises_at_poles(z):
    with pytest.raises(zf.PoleError):
        zf.log_gamma(z)
    with pytest.raises(zf.PoleError):
        zf.digamma(z)
    with pytest.raises(zf.PoleError):
        zf.trigamma(z)


def test_digamma_at_one_is_minus_euler_gamma():
    assert_close(zf.digamma(1), -float(mpmath.euler), atol=1e-15)


@pytest.mark.parametrize('z', [1, 2.5 - 1j, 0.5 + 30j])
def test_trigamma_matches_mpmath(z):
    assert_close(zf.trigamma(z), complex(mpmath.psi(1, z)), rtol=1e-13)


def test_q_cutoff_at_zero_is_one():
    assert zf.q_cutoff(5, 0.0) == 1.0


def test_q_cutoff_order_one_is_exponential():
    assert_close(zf.q_cutoff(1, 2.0), math.exp(-2.0), rtol=1e-15)


@pytest.mark.parametrize(('v', 'x'), [(5, 1.0), (6, 20.0), (30, 25.0), (200, 180.0)])
def test_q_cutoff_matches_regularized_incomplete_gamma(v, x):
    expected = float(mpmath.gammainc(v, x, regularized=True))
    assert_close(zf.q_cutoff(v, x), expected, rtol=1e-10)


def test_q_cutoff_large_argument_uses_log_space_without_overflow():
    assert 0.0 <= zf.q_cutoff(10, 1000.0) < 1e-300


def test_q_cutoff_is_decreasing():
    x = np.linspace(0, 50, 500)
    values = q_cutoff_array(8, x, hardware_backend())
    assert np.all(np.diff(values) <= 0)
    assert np.all((values > 0) & (values <= 1))


@pytest.mark.parametrize('x', [0.5, 5.0, 50.0, 150.0, 400.0])
def test_q_cutoff_is_increasing_in_order(x):
    values = [zf.q_cutoff(v, x) for v in range(1, 301)]
    compared = 0
    for lower, higher in zip(values, values[1:]):
        # beyond this the values round to one
        if lower > 1 - 1e-9:
            break
        assert higher > lower
        compared += 1
    assert compared >= 2


def test_q_cutoff_array_agrees_between_backends():
    x = np.array([0.5, 3.0, 17.0])
    backend = extended_backend(40)
    extended = q_cutoff_array(12, backend.reals(x), backend)
    hardware = q_cutoff_array(12, x, hardware_backend())
    np.testing.assert_allclose(
        [float(value) for value in extended], hardware, rtol=1e-13
    )


@pytest.mark.parametrize('v', [0, -1, 2.5, True])
def test_q_cutoff_rejects_invalid_order(v):
    with pytest.raises(zf.DomainError):
        zf.q_cutoff(v, 1.0)


def test_q_cutoff_rejects_negative_argument():
    with pytest.raises(zf.DomainError):
        zf.q_cutoff(5, -1.0)
