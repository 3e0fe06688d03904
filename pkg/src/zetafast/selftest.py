# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Quick consistency checks of an installation.

Each check exercises one of the guarantees of the package on a handful of
points and finishes in seconds.
"""

from __future__ import annotations

import dataclasses
import math
from collections.abc import Callable

from .config import Options
from .dirichlet import character, l_function
from .engine import e1_prefactored_term, e_sum, zeta, zeta_derivative
from .logging import get_logger
from .oracle import correction_summand_direct, zeta_em
from .params import (
    EvalParams,
    derive_params,
    order_equation_residual,
    solve_x0,
    speed_precondition,
    summand_bound,
)
from .scanner import find_zeros

FIRST_ZERO = 14.134725141734693


@dataclasses.dataclass(frozen=True, slots=True)
class CheckOutcome:
    """Result of one self-test check."""

    name: str
    passed: bool
    detail: str = ''

    def to_dict(self) -> dict[str, object]:
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail}


def _classical_values(options: Options | None) -> str | None:
    delta = 1e-8
    expected = {
        'zeta(2)': (zeta(2, delta, options=options).value, math.pi**2 / 6),
        'zeta(0)': (zeta(0, delta, options=options).value, -0.5),
        "zeta'(0)": (
            zeta_derivative(0, 1, delta, options=options).value,
            -0.5 * math.log(2 * math.pi),
        ),
    }
    failures = [
        f'{name} = {value} != {reference}'
        for name, (value, reference) in expected.items()
        if abs(value - reference) > delta
    ]
    return '; '.join(failures) or None


def _parameter_rules(options: Options | None) -> str | None:
    failures = []
    for sigma, tau, delta in ((0.0, 0.0, 0.05), (0.5, 1e3, 1e-6), (2.0, 1e5, 1e-9)):
        x0 = solve_x0(sigma, tau, delta)
        if abs(order_equation_residual(x0, sigma, tau, delta)) > 1e-9:
            failures.append(f'residual at {(sigma, tau, delta)}')
        v = derive_params(sigma, tau, delta).v
        if not 0 <= order_equation_residual(v, sigma, tau, delta) <= 1:
            failures.append(f'order {v} outside sandwich at {(sigma, tau, delta)}')
    params = derive_params(1.0, 10.0, 0.05)
    if (params.v, params.M) != (6, 2):
        failures.append(f'v, M = {params.v}, {params.M} at (1, 10, 0.05)')
    return '; '.join(failures) or None


def _negative_shift_negligible(options: Options | None) -> str | None:
    failures = []
    for sigma, tau, delta in ((0.5, 50.0, 1e-6), (1.5, 200.0, 1e-3), (0.0, 1e3, 1e-9)):
        params = derive_params(sigma, tau, delta)
        value, _ = e_sum(complex(sigma, tau), params, -1, options=options)
        if abs(value) > delta / 3:
            failures.append(f'|E_-1| = {abs(value):.3g} at {(sigma, tau, delta)}')
    return '; '.join(failures) or None


def _speed_bound(options: Options | None) -> str | None:
    failures = []
    for tau in (100.0, 1000.0):
        for delta in (1e-3, 1e-6):
            if not speed_precondition(tau, delta):
                continue
            used = zeta(complex(0.5, tau), delta, options=options).summands_used
            bound = summand_bound(0.5, tau, delta)
            if used > bound:
                failures.append(f'{used} > {bound:.1f} at tau={tau}, delta={delta}')
    return '; '.join(failures) or None


def _tail_form(options: Options | None) -> str | None:
    s = complex(0.3, 7.0)
    failures = []
    for v in (5, 8):
        params = EvalParams(v=v, N=1.5, M=2, delta=1e-30, certified=False)
        for m in (1, 2, 5):
            value = e1_prefactored_term(s, m, 1, params, options=options)
            direct = correction_summand_direct(s, m, 1, v, params.N)
            if abs(value - direct) > 1e-9 * abs(direct):
                failures.append(f'v={v}, m={m}: {value} != {direct}')
    return '; '.join(failures) or None


def _l_function(options: Options | None) -> str | None:
    result = l_function(1, character(4, 1), 1e-8, options=options)
    if abs(result.value - math.pi / 4) > 1e-8:
        return f'L(1, chi_4) = {result.value}'
    return None


def _first_zero(options: Options | None) -> str | None:
    zeros = find_zeros(14.0, 14.3, 1e-8, 0.05, options=options)
    if len(zeros) != 1 or abs(zeros[0][1] - FIRST_ZERO) > 1e-6:
        return f'zeros in [14, 14.3]: {[t for _, t in zeros]}'
    return None


def _oracle_agreement(options: Options | None) -> str | None:
    s = complex(0.5, 1000.0)
    delta = 1e-6
    difference = abs(zeta(s, delta, options=options).value - zeta_em(s))
    if difference > delta:
        return f'|zeta - zeta_em| = {difference:.3g} at s={s}'
    return None


_CHECKS: dict[str, Callable[[Options | None], str | None]] = {
    'classical values': _classical_values,
    'parameter rules': _parameter_rules,
    'negative shift negligible': _negative_shift_negligible,
    'speed bound': _speed_bound,
    'tail form': _tail_form,
    'L(1, chi_4)': _l_function,
    'first zero': _first_zero,
    'oracle agreement': _oracle_agreement,
}


def run_selftest(options: Options | None = None) -> list[CheckOutcome]:
    """Run all checks.

    Exceptions raised by a check are reported as failures of that check.
    """
    logger = get_logger()
    outcomes = []
    for name, check in _CHECKS.items():
        try:
            failure = check(options)
        except Exception as err:  # noqa: BLE001
            failure = f'{type(err).__name__}: {err}'
        outcome = CheckOutcome(name, failure is None, failure or '')
        logger.info('%s: %s', name, 'ok' if outcome.passed else outcome.detail)
        outcomes.append(outcome)
    return outcomes
