# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
import pytest

import zetafast as zf
from zetafast.config import PRECISION_ENV_VAR, resolve_options


def test_default_options():
    options = zf.get_options()
    assert options == zf.Options()
    assert options.precision is zf.Precision.auto
    assert options.extended_digits == 30


@pytest.mark.parametrize('value', ['hardware', 'extended'])
def test_environment_variable(monkeypatch, value):
    monkeypatch.setenv(PRECISION_ENV_VAR, value)
    assert zf.get_options().precision is zf.Precision(value)


def test_empty_environment_variable_is_ignored(monkeypatch):
    monkeypatch.setenv(PRECISION_ENV_VAR, '')
    assert zf.get_options().precision is zf.Precision.auto


@pytest.mark.parametrize('value', ['auto', 'quad', 'HARDWARE'])
def test_invalid_environment_variable(monkeypatch, value):
    monkeypatch.setenv(PRECISION_ENV_VAR, value)
    with pytest.raises(zf.DomainError):
        zf.get_options()


def test_explicit_options_override_environment(monkeypatch):
    monkeypatch.setenv(PRECISION_ENV_VAR, 'extended')
    options = zf.Options(precision='hardware')
    assert resolve_options(options) is options
    assert resolve_options(None).precision is zf.Precision.extended


def test_precision_is_converted_from_string():
    assert zf.Options(precision='extended').precision is zf.Precision.extended
    with pytest.raises(ValueError, match='quad'):
        zf.Options(precision='quad')


@pytest.mark.parametrize(
    'changes',
    [
        {'extended_digits': 15},
        {'extended_digits': 40, 'max_extended_digits': 30},
        {'max_tail_terms': 0},
        {'cancellation_factor': 0.0},
        {'roundoff_fraction': -1.0},
    ],
)
def test_invalid_options(changes):
    with pytest.raises(zf.DomainError):
        zf.Options(**changes)


def test_enum_strings():
    assert str(zf.Precision.hardware) == 'hardware'
    assert str(zf.Engine.oracle) == 'oracle'
    assert zf.Engine('zetafast') is zf.Engine.zetafast
