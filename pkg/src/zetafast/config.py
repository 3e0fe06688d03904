# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Evaluation options.

The defaults can be overridden for a single call by passing an
:class:`Options` instance to any evaluator, or process wide through the
environment variable ``ZETAFAST_PRECISION``.
"""

from __future__ import annotations

import dataclasses
import enum
import os

from .core.errors import DomainError

PRECISION_ENV_VAR = 'ZETAFAST_PRECISION'


class Precision(enum.Enum):
    """Backend selection policy."""

    auto = 'auto'
    """Hardware precision, extended precision if roundoff voids the certificate."""
    hardware = 'hardware'
    """Hardware precision only. Results spoiled by roundoff are uncertified."""
    extended = 'extended'
    """Always use the extended backend."""

    def __str__(self) -> str:
        return self.value


class Engine(enum.Enum):
    """Evaluator used by the scanner and the command line."""

    zetafast = 'zetafast'
    """The smoothed series of :func:`zetafast.zeta`."""
    oracle = 'oracle'
    """Euler-Maclaurin summation, see :mod:`zetafast.oracle`."""

    def __str__(self) -> str:
        return self.value


@dataclasses.dataclass(frozen=True, slots=True)
class Options:
    """
    Optional arguments of the evaluators.
    """

    precision: Precision = Precision.auto
    extended_digits: int = 30
    """Minimum number of digits of the extended backend."""
    max_extended_digits: int = 100
    """Extended evaluations needing more digits raise PrecisionExhaustedError."""
    max_tail_terms: int = 10_000
    """Maximum number of binomial tail terms per correction summand."""
    cancellation_factor: float = 1e3
    """Certificate requires ``cancellation_ratio * epsilon * factor <= delta``."""
    roundoff_fraction: float = 0.1
    """Certificate requires ``roundoff_estimate <= fraction * delta``."""

    def __post_init__(self) -> None:
        if not isinstance(self.precision, Precision):
            object.__setattr__(self, 'precision', Precision(self.precision))
        if self.extended_digits <= 15:
            raise DomainError(
                f'extended_digits must exceed 15, got {self.extended_digits}.'
            )
        if self.max_extended_digits < self.extended_digits:
            raise DomainError('max_extended_digits must be >= extended_digits.')
        if self.max_tail_terms < 1:
            raise DomainError('max_tail_terms must be positive.')
        if self.cancellation_factor <= 0 or self.roundoff_fraction <= 0:
            raise DomainError('Roundoff thresholds must be positive.')


def get_options() -> Options:
    """Return the default options, honoring ``ZETAFAST_PRECISION``.

    Raises
    ------
    zetafast.DomainError
        If the environment variable holds anything but ``hardware`` or ``extended``.
    """
    value = os.environ.get(PRECISION_ENV_VAR)
    if value is None or value == '':
        return Options()
    if value not in (Precision.hardware.value, Precision.extended.value):
        raise DomainError(
            f'{PRECISION_ENV_VAR} must be "hardware" or "extended", got {value!r}.'
        )
    return Options(precision=Precision(value))


def resolve_options(options: Options | None) -> Options:
    """Return ``options`` or the defaults if ``None``."""
    return get_options() if options is None else options
