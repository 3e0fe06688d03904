# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
import math

from hypothesis import given, settings
from hypothesis import strategies as st

import zetafast as zf
from zetafast.params import order_equation_residual
from zetafast.testing import assert_close, assert_within_bound
from zetafast.testing import strategies as zst


@settings(max_examples=100, deadline=None)
@given(zst.sigmas(), zst.taus(max_value=1e6), zst.accuracies())
def test_order_lies_in_sandwich(sigma, tau, delta):
    v = zf.solve_v(sigma, tau, delta)
    assert v >= 5
    assert 0 <= order_equation_residual(v, sigma, tau, delta) <= 1


@settings(max_examples=100, deadline=None)
@given(zst.sigmas(), zst.taus(), zst.accuracies())
def test_derived_params_are_consistent(sigma, tau, delta):
    params = zf.derive_params(sigma, tau, delta)
    assert params.certified
    assert params.M == math.ceil(params.N)
    assert params.d_cutoff >= params.v


@settings(max_examples=25, deadline=None)
@given(zst.strip_points(max_tau=300.0), zst.accuracies(-10, -3))
def test_certified_values_agree_with_oracle(s, delta):
    result = zf.zeta(s, delta)
    assert result.certified
    assert_within_bound(result, zf.zeta_em(s), context=(s, delta))


@settings(max_examples=25, deadline=None)
@given(zst.strip_points(max_tau=300.0))
def test_conjugate_symmetry(s):
    upper = zf.zeta(s, 1e-8)
    lower = zf.zeta(s.conjugate(), 1e-8)
    assert lower.value == upper.value.conjugate()


@settings(max_examples=15, deadline=None)
@given(
    zst.primitive_characters(),
    st.floats(min_value=0.5, max_value=1.5),
    st.floats(min_value=-30.0, max_value=30.0),
)
def test_l_function_agrees_with_oracle(chi, sigma, tau):
    s = complex(sigma, tau)
    result = zf.l_function(s, chi, 1e-8)
    assert_close(result.value, zf.l_function_em(s, chi), atol=1e-7, context=(chi, s))
