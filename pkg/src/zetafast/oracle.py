# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Reference evaluators based on Euler-Maclaurin summation.

For ``x = N + a`` the Hurwitz zeta function is

.. math::

    \\zeta(s, a) = \\sum_{n=0}^{N-1} (n+a)^{-s} + \\frac{x^{1-s}}{s-1}
        + \\frac{x^{-s}}{2}
        + \\sum_{k=1}^{K} \\frac{B_{2k}}{(2k)!} (s)_{2k-1} x^{-s-2k+1} + R_K,

with the rising factorial :math:`(s)_j`. The cost grows linearly with
``Im s`` which makes these functions far slower than :func:`zetafast.zeta`,
but they share no code path with it besides the backends.
Every value is checked against a second evaluation with twice the cutoff.
"""

from __future__ import annotations

import cmath
import dataclasses
import functools
import math
from collections.abc import Callable
from fractions import Fraction
from typing import Any

import mpmath
import numpy as np
import numpy.typing as npt

from .core.errors import DomainError, NonConvergenceError, PoleError
from .core.numerics import as_complex
from .core.precision import Backend, WorkingPrecision, extended_backend, make_backend
from .dirichlet import DirichletCharacter
from .engine import EvalResult
from .logging import get_logger

MAX_BERNOULLI_ORDER = 60
DEFAULT_DIGITS = 30
VALIDATION_TOLERANCE = 1e-12
"""Relative agreement required between an evaluation and its doubled check."""

_Evaluation = tuple[complex, float]
"""A value and the magnitude of its largest term."""


def _default_precision() -> WorkingPrecision:
    return WorkingPrecision.extended(DEFAULT_DIGITS)


def min_cutoff(s: complex) -> int:
    """Smallest number of explicitly summed terms accepted for ``s``."""
    return max(10, math.ceil(abs(complex(s).imag) / 2) + 10)


@dataclasses.dataclass(frozen=True, slots=True)
class EulerMaclaurinConfig:
    """Truncation and precision of an Euler-Maclaurin evaluation.

    Parameters
    ----------
    cutoff_terms:
        Number of explicitly summed terms, at least 10.
    bernoulli_order:
        Order ``2K`` of the last Bernoulli correction, even and between 10 and 60.
    precision:
        Working precision, 30 significant digits by default.
    """

    cutoff_terms: int
    bernoulli_order: int = MAX_BERNOULLI_ORDER
    precision: WorkingPrecision = dataclasses.field(default_factory=_default_precision)

    def __post_init__(self) -> None:
        if self.cutoff_terms < 10:
            raise DomainError(f'cutoff_terms must be >= 10, got {self.cutoff_terms}.')
        if (
            self.bernoulli_order % 2
            or not 10 <= self.bernoulli_order <= MAX_BERNOULLI_ORDER
        ):
            raise DomainError(
                'bernoulli_order must be even and between 10 and '
                f'{MAX_BERNOULLI_ORDER}, got {self.bernoulli_order}.'
            )

    @classmethod
    def for_argument(
        cls, s: complex, precision: WorkingPrecision | None = None
    ) -> EulerMaclaurinConfig:
        """The smallest admissible configuration for ``s``."""
        return cls(
            cutoff_terms=min_cutoff(s),
            precision=_default_precision() if precision is None else precision,
        )

    def doubled(self) -> EulerMaclaurinConfig:
        """The same configuration with twice the cutoff."""
        return dataclasses.replace(self, cutoff_terms=2 * self.cutoff_terms)

    def check_argument(self, s: complex) -> None:
        if self.cutoff_terms < min_cutoff(s):
            raise DomainError(
                f'cutoff_terms={self.cutoff_terms} is too small for s={s}, '
                f'at least {min_cutoff(s)} are required.'
            )


@functools.cache
def bernoulli_numbers() -> tuple[Fraction, ...]:
    """Exact Bernoulli numbers ``B_0 .. B_60`` with ``B_1 = -1/2``."""
    return tuple(
        Fraction(*map(int, mpmath.bernfrac(k))) for k in range(MAX_BERNOULLI_ORDER + 1)
    )


@functools.cache
def _correction_coefficients(order: int) -> tuple[Fraction, ...]:
    """``B_{2k} / (2k)!`` for ``k = 1 .. order / 2``."""
    table = bernoulli_numbers()
    return tuple(
        table[2 * k] / math.factorial(2 * k) for k in range(1, order // 2 + 1)
    )


def _rational(value: Fraction, backend: Backend) -> Any:
    return backend.real(value.numerator) / backend.real(value.denominator)


def _pole_term(s: Any, log_x: Any, backend: Backend, *, cancel: bool) -> Any:
    """``x^{1-s} / (s-1)``, or ``(x^{1-s} - 1) / (s-1)`` if ``cancel``.

    The constant dropped by ``cancel`` vanishes from sums whose weights add up
    to zero, and the remainder is finite at ``s = 1`` with limit ``-log x``.
    """
    u = (1 - s) * log_x
    if not cancel:
        return backend.exp(u) / (s - 1)
    if u == 0:
        return -log_x
    return -log_x * backend.expm1(u) / u


def _hurwitz_terms(
    s: Any,
    a: Fraction,
    cfg: EulerMaclaurinConfig,
    backend: Backend,
    *,
    cancel_pole: bool = False,
) -> npt.NDArray[Any]:
    """Terms of the Euler-Maclaurin approximation of ``zeta(s, a)``."""
    a_b = _rational(a, backend)
    N = cfg.cutoff_terms
    n = backend.reals(np.arange(N)) + a_b
    head = backend.exp(backend.log(n) * (-s))
    x = backend.real(N) + a_b
    log_x = backend.log(x)
    x_pow = backend.exp(-s * log_x)
    terms = [_pole_term(s, log_x, backend, cancel=cancel_pole), x_pow / 2]
    inverse_square = 1 / (x * x)
    rising = s
    power = x_pow / x
    for k, coeff in enumerate(
        _correction_coefficients(cfg.bernoulli_order), start=1
    ):
        if k > 1:
            rising = rising * (s + 2 * k - 3) * (s + 2 * k - 2)
            power = power * inverse_square
        terms.append(_rational(coeff, backend) * rising * power)
    dtype = object if backend.precision.is_extended else np.complex128
    return np.concatenate([head, np.array(terms, dtype=dtype)])


def _summed(terms: npt.NDArray[Any], factor: Any, backend: Backend) -> _Evaluation:
    scale = float(backend.magnitude(terms).max()) * abs(backend.to_complex(factor))
    return backend.to_complex(backend.fsum(terms) * factor), scale


def _check_argument(s: complex) -> complex:
    s = as_complex(s, 's')
    if s == 1:
        raise PoleError('The zeta function has a pole at s = 1.')
    return s


def _as_fraction(a: Fraction | float | int) -> Fraction:
    try:
        a = Fraction(a)
    except (TypeError, ValueError) as err:
        raise DomainError(f'Invalid Hurwitz parameter {a!r}.') from err
    if not 0 < a <= 1:
        raise DomainError(f'The Hurwitz parameter must lie in (0, 1], got {a}.')
    return a


def _check_significance(
    evaluation: _Evaluation, cfg: EulerMaclaurinConfig, what: str
) -> complex:
    value, scale = evaluation
    if not cmath.isfinite(value):
        raise NonConvergenceError(f'{what}: Euler-Maclaurin sum is not finite.')
    # rounding of the largest term alone must stay within the tolerance
    if scale * cfg.precision.machine_epsilon > VALIDATION_TOLERANCE * max(
        1.0, abs(value)
    ):
        raise NonConvergenceError(
            f'{what}: terms up to {scale:.3g} cancel to {abs(value):.3g} '
            f'with {cfg.precision.significant_decimal_digits} digits.'
        )
    return value


def _validated(
    evaluate: Callable[[EulerMaclaurinConfig], _Evaluation],
    cfg: EulerMaclaurinConfig,
    validate: bool,
    what: str,
) -> complex:
    value = _check_significance(evaluate(cfg), cfg, what)
    if not validate:
        return value
    doubled = cfg.doubled()
    check = _check_significance(evaluate(doubled), doubled, what)
    difference = abs(value - check)
    if difference > VALIDATION_TOLERANCE * max(1.0, abs(value)):
        raise NonConvergenceError(
            f'{what}: Euler-Maclaurin evaluations with {cfg.cutoff_terms} and '
            f'{2 * cfg.cutoff_terms} terms differ by {difference:.3g}.'
        )
    get_logger().debug('%s: self-validation difference %.3g', what, difference)
    return value


def hurwitz_em(
    s: complex,
    a: Fraction | float | int,
    cfg: EulerMaclaurinConfig | None = None,
    *,
    validate: bool = True,
) -> complex:
    """Hurwitz zeta function ``sum_{n>=0} (n+a)^{-s}``.

    Parameters
    ----------
    s:
        Argument, ``s != 1``.
    a:
        Rational shift in ``(0, 1]``. Floats are converted exactly.
    cfg:
        Configuration, :meth:`EulerMaclaurinConfig.for_argument` by default.
    validate:
        Compare against an evaluation with the doubled configuration.

    Raises
    ------
    zetafast.PoleError
        At ``s = 1``.
    zetafast.NonConvergenceError
        If the two evaluations disagree by more than ``1e-12`` relative,
        or if cancellation leaves fewer significant digits than that.

    Examples
    --------

      >>> import math
      >>> import zetafast as zf
      >>> abs(zf.hurwitz_em(2, 0.5) - math.pi**2 / 2) < 1e-12
      True
    """
    s = _check_argument(s)
    a = _as_fraction(a)
    cfg = EulerMaclaurinConfig.for_argument(s) if cfg is None else cfg
    cfg.check_argument(s)

    def evaluate(c: EulerMaclaurinConfig) -> _Evaluation:
        backend = make_backend(c.precision)
        return _summed(_hurwitz_terms(backend.scalar(s), a, c, backend), 1, backend)

    return _validated(evaluate, cfg, validate, f'zeta({s}, {a})')


def zeta_em(
    s: complex, cfg: EulerMaclaurinConfig | None = None, *, validate: bool = True
) -> complex:
    """Riemann zeta function by Euler-Maclaurin summation.

    See :func:`hurwitz_em` for the parameters.
    """
    return hurwitz_em(s, 1, cfg, validate=validate)


def l_function_em(
    s: complex,
    chi: DirichletCharacter,
    cfg: EulerMaclaurinConfig | None = None,
    *,
    validate: bool = True,
) -> complex:
    """Dirichlet L-function ``q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q)``.

    Any character is accepted, principal and imprimitive ones included.
    For non-principal characters the poles of the Hurwitz functions cancel
    exactly, so ``s = 1`` is admissible.

    Raises
    ------
    zetafast.PoleError
        At ``s = 1`` if ``chi`` is principal.
    """
    s = _check_argument(s) if chi.is_principal else as_complex(s, 's')
    cfg = EulerMaclaurinConfig.for_argument(s) if cfg is None else cfg
    cfg.check_argument(s)
    q = chi.modulus

    def evaluate(c: EulerMaclaurinConfig) -> _Evaluation:
        backend = make_backend(c.precision)
        s_b = backend.scalar(s)
        table = chi.table(backend)
        terms = np.concatenate(
            [
                table[a % q]
                * _hurwitz_terms(
                    s_b, Fraction(a, q), c, backend, cancel_pole=not chi.is_principal
                )
                for a in range(1, q + 1)
                if table[a % q] != 0
            ]
        )
        factor = backend.exp(-s_b * backend.log(backend.real(q)))
        return _summed(terms, factor, backend)

    return _validated(evaluate, cfg, validate, f'L({s}, {chi})')


def oracle_result(value: complex, cfg: EulerMaclaurinConfig) -> EvalResult:
    """Wrap an oracle value in an uncertified :class:`zetafast.EvalResult`."""
    return EvalResult(
        value=value,
        error_bound=VALIDATION_TOLERANCE * max(1.0, abs(value)),
        summands_used=cfg.cutoff_terms,
        certified=False,
        max_cancellation_ratio=0.0,
        precision='extended' if cfg.precision.is_extended else 'hardware',
    )


def correction_summand_direct(
    s: complex, m: int, mu: int, v: int, N: float, *, digits: int = DEFAULT_DIGITS
) -> complex:
    """Prefactored correction summand from its closed form.

    .. math::

        (2\\pi)^{s-1} \\Gamma(1-s) e^{i\\mu\\pi(1-s)/2}
        \\Big[m^{s-1} - \\sum_{w<v} \\binom{s-1}{w} (m+z)^{s-1-w} (-z)^w\\Big],
        \\quad z = \\frac{i\\mu}{2\\pi N}

    evaluated in ``digits`` significant digits. The bracket cancels heavily, so
    this is only usable for moderate ``Im s``.
    """
    ctx = extended_backend(digits).context
    s_m = ctx.mpc(complex(s))
    z = ctx.mpc(0, mu) / (2 * ctx.pi * ctx.mpf(N))
    u = m + z
    partial = ctx.fsum(
        ctx.binomial(s_m - 1, w) * ctx.power(u, s_m - 1 - w) * ctx.power(-z, w)
        for w in range(v)
    )
    remainder = ctx.power(m, s_m - 1) - partial
    prefactor = (
        ctx.power(2 * ctx.pi, s_m - 1)
        * ctx.gamma(1 - s_m)
        * ctx.exp(ctx.mpc(0, mu) * ctx.pi * (1 - s_m) / 2)
    )
    return complex(prefactor * remainder)
