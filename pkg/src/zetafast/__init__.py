# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
# ruff: noqa: E402, F401
"""The Riemann zeta function and Dirichlet L-functions with error bounds.

Zetafast provides

* Evaluation of zeta(s) with a proven error bound in the strip 0 <= Re s <= 2.
* Derivatives of zeta(s) by termwise differentiation.
* Dirichlet characters, Gauss sums and L-functions of primitive characters.
* An independent Euler-Maclaurin reference implementation.
* Hardy's Z function and a scanner for zeros on the critical line.
"""

import importlib.metadata

try:
    __version__ = importlib.metadata.version(__package__ or __name__)
except importlib.metadata.PackageNotFoundError:
    __version__ = '0.0.0'

del importlib

# Import errors
from .core import (
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

from .core import WorkingPrecision, complex_pow, digamma, log_gamma, principal_log
from .core import q_cutoff, trigamma

from .config import Engine, Options, Precision, get_options
from .params import (
    EvalParams,
    Mode,
    RequestedEvaluation,
    derive_l_params,
    derive_params,
    solve_v,
    solve_x0,
    speed_precondition,
    summand_bound,
)
from .engine import (
    EvalResult,
    correction_term,
    d_sum,
    e1_prefactored_term,
    e1_sum,
    e_sum,
    zeta,
    zeta_derivative,
)
from .dirichlet import (
    DirichletCharacter,
    DirichletGroup,
    GaussSumValue,
    character,
    characters_mod,
    gauss_sum,
    l_function,
)
from .oracle import (
    EulerMaclaurinConfig,
    bernoulli_numbers,
    hurwitz_em,
    l_function_em,
    zeta_em,
)
from .scanner import ZeroBracket, find_zeros, hardy_z, hardy_z_complex, rs_theta
from .bench import BenchRecord, run_bench, write_bench_csv
from .selftest import CheckOutcome, run_selftest
