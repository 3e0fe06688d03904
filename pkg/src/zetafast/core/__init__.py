# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors

# ruff: noqa: F401
"""Numeric building blocks: backends, special functions and series kernels."""

from .errors import (
    CharacterError,
    DomainError,
    InvalidAccuracyError,
    NonConvergenceError,
    PoleError,
    PrecisionExhaustedError,
    PreconditionError,
    UnsupportedModulusError,
    ZetafastError,
)
from .numerics import (
    complex_pow,
    digamma,
    log_gamma,
    principal_log,
    q_cutoff,
    q_cutoff_array,
    trigamma,
)
from .precision import (
    Backend,
    ExtendedBackend,
    HardwareBackend,
    WorkingPrecision,
    extended_backend,
    hardware_backend,
    make_backend,
)
from .summation import SeriesAccumulator
