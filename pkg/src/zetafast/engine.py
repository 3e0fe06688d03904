# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Evaluation of the Riemann zeta function and its derivatives.

For ``s = sigma + i tau`` with ``tau > 0``

.. math::

    \\zeta(s) \\approx D(N, s) + E_1(M, s)
        - \\frac{\\Gamma(1-s+v)}{(1-s)\\Gamma(v)} N^{1-s},

where :math:`D` is the smoothed Dirichlet sum and :math:`E_1` the first ``M``
correction summands, see :mod:`zetafast.core.series`.
With parameters from :func:`zetafast.derive_params` the error is below
``delta``. On the real axis the correction series is dropped and for
``tau < 0`` the result is obtained by conjugation.
"""

from __future__ import annotations

import dataclasses
import math
from collections.abc import Callable
from typing import Any

import numpy as np

from .config import Options, Precision, resolve_options
from .core.errors import DomainError, PoleError, PrecisionExhaustedError
from .core.numerics import as_complex
from .core.precision import Backend, extended_backend, hardware_backend
from .core.series import correction_series, dirichlet_series, tail_tolerance
from .core.summation import SeriesAccumulator
from .logging import get_logger
from .params import EvalParams, Mode, RequestedEvaluation, derive_params


@dataclasses.dataclass(frozen=True, slots=True)
class EvalResult:
    """Result of an evaluation.

    Parameters
    ----------
    value:
        The computed value.
    error_bound:
        Bound on the absolute error. Equals the requested ``delta`` for
        certified results.
    summands_used:
        Number of summands charged: the main sum terms plus ``v + 1`` per
        correction summand.
    certified:
        Whether the truncation error is proven below ``error_bound`` and
        roundoff was verified to be negligible.
    max_cancellation_ratio:
        Largest ratio of term magnitude to series total over all component series.
    params:
        Truncation parameters used.
    precision:
        Name of the backend that produced the value.
    roundoff_estimate:
        Bound on the absolute roundoff error.
    tail_terms:
        Number of binomial tail terms evaluated for the correction series.
    """

    value: complex
    error_bound: float
    summands_used: int
    certified: bool
    max_cancellation_ratio: float
    params: EvalParams | None = None
    precision: str = 'hardware'
    roundoff_estimate: float = 0.0
    tail_terms: int = 0

    def __post_init__(self) -> None:
        if self.certified and self.params is not None:
            if self.error_bound != self.params.delta:
                raise ValueError('A certified error bound must equal delta.')

    def conjugate(self) -> EvalResult:
        return dataclasses.replace(self, value=self.value.conjugate())

    def to_dict(self) -> dict[str, Any]:
        """Plain dictionary suitable for JSON output."""
        out: dict[str, Any] = {
            'value': {'re': self.value.real, 'im': self.value.imag},
            'error_bound': self.error_bound,
            'certified': self.certified,
            'summands_used': self.summands_used,
            'max_cancellation_ratio': self.max_cancellation_ratio,
            'precision': self.precision,
            'roundoff_estimate': self.roundoff_estimate,
            'tail_terms': self.tail_terms,
        }
        if self.params is not None:
            out['params'] = self.params.to_dict()
        return out


@dataclasses.dataclass
class SeriesEvaluation:
    """Component series of one evaluation in one backend."""

    backend: Backend
    components: dict[str, SeriesAccumulator]
    signs: dict[str, int]
    tail_terms: int = 0

    @property
    def total(self) -> Any:
        totals = [
            self.components[name].total * self.signs[name] for name in self.components
        ]
        dtype = object if self.backend.precision.is_extended else np.complex128
        return self.backend.fsum(np.array(totals, dtype=dtype))

    @property
    def condition(self) -> float:
        return sum(acc.condition for acc in self.components.values())

    @property
    def roundoff_estimate(self) -> float:
        return self.backend.epsilon * self.condition

    @property
    def max_cancellation_ratio(self) -> float:
        return max(
            (acc.cancellation_ratio() for acc in self.components.values() if acc.count),
            default=0.0,
        )


def initial_backend(options: Options) -> Backend:
    if options.precision is Precision.extended:
        return extended_backend(options.extended_digits)
    return hardware_backend()


def _roundoff_ok(evaluation: SeriesEvaluation, delta: float, options: Options) -> bool:
    eps = evaluation.backend.epsilon
    ratio = evaluation.max_cancellation_ratio
    return (
        evaluation.roundoff_estimate <= options.roundoff_fraction * delta
        and ratio * eps * options.cancellation_factor <= delta
    )


def _required_digits(
    evaluation: SeriesEvaluation, delta: float, options: Options
) -> float:
    ratio = evaluation.max_cancellation_ratio
    if not math.isfinite(ratio):
        return math.inf
    digits = max(
        options.extended_digits,
        math.ceil(
            math.log10(max(evaluation.condition, 1.0) / (options.roundoff_fraction * delta))
        )
        + 3,
        math.ceil(math.log10(max(ratio, 1.0) * options.cancellation_factor / delta)) + 2,
    )
    current = evaluation.backend.precision
    if current.is_extended:
        digits = max(digits, current.significant_decimal_digits + 10)
    return digits


def evaluate_with_fallback(
    evaluate: Callable[[Backend], SeriesEvaluation],
    delta: float,
    options: Options,
    what: str,
) -> tuple[SeriesEvaluation, bool]:
    """Run ``evaluate`` in increasing precision until roundoff is below ``delta``.

    Returns
    -------
    :
        The final evaluation and whether its roundoff is certified to be small.

    Raises
    ------
    zetafast.PrecisionExhaustedError
        If more than ``options.max_extended_digits`` digits would be needed.
    """
    logger = get_logger()
    backend = initial_backend(options)
    while True:
        evaluation = evaluate(backend)
        if _roundoff_ok(evaluation, delta, options):
            return evaluation, True
        if options.precision is Precision.hardware:
            logger.warning(
                '%s: roundoff estimate %.3g or cancellation ratio %.3g too large '
                'for delta=%.3g in hardware precision; result is not certified.',
                what,
                evaluation.roundoff_estimate,
                evaluation.max_cancellation_ratio,
                delta,
            )
            return evaluation, False
        digits = _required_digits(evaluation, delta, options)
        if digits > options.max_extended_digits:
            raise PrecisionExhaustedError(
                f'{what}: reaching delta={delta:.3g} would need {digits} digits, '
                f'more than the maximum of {options.max_extended_digits}.'
            )
        logger.info(
            '%s: roundoff estimate %.3g in %s precision, retrying with %d digits.',
            what,
            evaluation.roundoff_estimate,
            backend.name,
            digits,
        )
        backend = extended_backend(int(digits))


def _check_order(order: int, allowed: tuple[int, ...]) -> int:
    if order not in allowed:
        raise DomainError(f'Derivative order must be one of {allowed}, got {order}.')
    return int(order)


def _check_not_pole(s: complex) -> None:
    if s == 1:
        raise PoleError('The zeta function has a pole at s = 1.')


def _correction_value(
    s: Any, params: EvalParams, backend: Backend, order: int
) -> tuple[Any, Any]:
    """Correction term and the exponent it was obtained from."""
    one_minus_s = 1 - s
    shifted = one_minus_s + params.v
    log_n = backend.log(backend.real(params.N))
    exponent = (
        backend.loggamma(shifted)
        - backend.loggamma(backend.real(params.v))
        + one_minus_s * log_n
    )
    value = backend.exp(exponent) / one_minus_s
    if order == 0:
        return value, exponent
    dlog = -backend.digamma(shifted) - log_n
    inverse = 1 / one_minus_s
    if order == 1:
        return value * (dlog + inverse), exponent
    d2log = backend.trigamma(np.array([shifted], dtype=object))[0]
    return (
        value * (d2log + dlog * dlog + 2 * dlog * inverse + 2 * inverse * inverse),
        exponent,
    )


def evaluate_zeta_series(
    s: complex,
    params: EvalParams,
    backend: Backend,
    *,
    mus: tuple[int, ...],
    order: int = 0,
    options: Options,
) -> SeriesEvaluation:
    """Evaluate all component series of the zeta representation in ``backend``."""
    s_b = backend.scalar(s)
    components = {
        'D': dirichlet_series(s_b, params.v, params.N, params.d_cutoff, backend, order=order)
    }
    signs = {'D': 1}
    tail_terms = 0
    for mu in mus:
        acc, count = correction_series(
            s_b,
            params.v,
            params.N,
            mu,
            range(1, params.M + 1),
            backend,
            tolerance=tail_tolerance(params.delta, params.M),
            max_terms=options.max_tail_terms,
            order=order,
        )
        name = f'E{mu:+d}'
        components[name] = acc
        signs[name] = 1
        tail_terms += count
    correction = SeriesAccumulator(backend)
    correction.add_value(*_correction_value(s_b, params, backend, order))
    components['correction'] = correction
    signs['correction'] = -1
    return SeriesEvaluation(backend, components, signs, tail_terms)


def _zeta(
    s: complex, delta: float, mode: Mode, order: int, options: Options | None
) -> EvalResult:
    options = resolve_options(options)
    request = RequestedEvaluation(s, delta, mode)
    _check_not_pole(request.s)
    if request.tau < 0:
        return _zeta(request.s.conjugate(), delta, mode, order, options).conjugate()
    params = derive_params(request.sigma, request.tau, request.delta, request.mode)
    if request.mode is Mode.heuristic:
        mus: tuple[int, ...] = (1, -1)
    elif request.tau > 0:
        mus = (1,)
    else:
        mus = ()
    logger = get_logger()
    logger.debug('zeta(%s) order %d: %s', request.s, order, params)

    evaluation, roundoff_ok = evaluate_with_fallback(
        lambda backend: evaluate_zeta_series(
            request.s, params, backend, mus=mus, order=order, options=options
        ),
        request.delta,
        options,
        f'zeta({request.s})',
    )
    backend = evaluation.backend
    for name, acc in evaluation.components.items():
        logger.debug(
            '  %s = %s (%d terms)', name, backend.to_complex(acc.total), acc.count
        )
    roundoff = evaluation.roundoff_estimate
    certified = params.certified and order == 0 and roundoff_ok
    return EvalResult(
        value=backend.to_complex(evaluation.total),
        error_bound=request.delta if roundoff_ok else request.delta + roundoff,
        summands_used=params.summand_count(correction_series=len(mus)),
        certified=certified,
        max_cancellation_ratio=evaluation.max_cancellation_ratio,
        params=params,
        precision=backend.name,
        roundoff_estimate=roundoff,
        tail_terms=evaluation.tail_terms,
    )


def zeta(
    s: complex,
    delta: float,
    mode: Mode | str = Mode.certified,
    *,
    options: Options | None = None,
) -> EvalResult:
    """Riemann zeta function to accuracy ``delta``.

    Parameters
    ----------
    s:
        Argument, ``s != 1``.
    delta:
        Requested absolute accuracy.
        Certified mode requires ``delta <= 0.05`` and ``0 <= Re s <= 2``.
    mode:
        ``'certified'`` or ``'heuristic'``. Heuristic mode accepts any ``s``
        and ``delta`` and evaluates both correction series.
    options:
        Precision options, defaults to :func:`zetafast.config.get_options`.

    Returns
    -------
    :
        The value with its error bound and diagnostics.

    Raises
    ------
    zetafast.PoleError
        At ``s = 1``.
    zetafast.DomainError
        For certified evaluation outside ``0 <= Re s <= 2``.
    zetafast.InvalidAccuracyError
        For an invalid ``delta``.
    zetafast.PrecisionExhaustedError
        If roundoff cannot be brought below ``delta``.

    Examples
    --------

      >>> import zetafast as zf
      >>> round(zf.zeta(2, 1e-10).value.real, 10)
      1.6449340668
    """
    return _zeta(as_complex(s, 's'), delta, Mode(mode), 0, options)


def zeta_derivative(
    s: complex,
    order: int,
    delta: float,
    mode: Mode | str = Mode.certified,
    *,
    options: Options | None = None,
) -> EvalResult:
    """First or second derivative of the Riemann zeta function.

    The series representation is differentiated termwise with the parameters
    chosen for ``zeta(s, delta)``.
    No error bound is proven for derivatives, so results are never certified.
    """
    order = _check_order(order, (1, 2))
    return _zeta(as_complex(s, 's'), delta, Mode(mode), order, options)


def _pole_free_argument(s: complex) -> complex:
    s = as_complex(s, 's')
    _check_not_pole(s)
    return s


def d_sum(
    s: complex,
    p: EvalParams,
    *,
    order: int = 0,
    start: int = 1,
    stop: int | None = None,
    options: Options | None = None,
) -> tuple[complex, int]:
    """Smoothed Dirichlet sum ``sum_{n=start}^{stop} n^{-s} Q(v, n/N)``.

    ``stop`` defaults to ``ceil(lambda v N)``.

    Returns
    -------
    :
        The sum and the number of terms.
    """
    s = as_complex(s, 's')
    order = _check_order(order, (0, 1, 2))
    backend = initial_backend(resolve_options(options))
    stop = p.d_cutoff if stop is None else stop
    acc = dirichlet_series(
        backend.scalar(s), p.v, p.N, stop, backend, start=start, order=order
    )
    return backend.to_complex(acc.total), acc.count


def e1_prefactored_term(
    s: complex,
    m: int,
    mu: int,
    p: EvalParams,
    *,
    order: int = 0,
    options: Options | None = None,
) -> complex:
    """Correction summand ``m`` including all gamma and exponential prefactors.

    Computed as the convergent binomial tail starting at ``w = v``.
    """
    return e_sum(s, p, mu, order=order, m_start=m, m_stop=m, options=options)[0]


def e_sum(
    s: complex,
    p: EvalParams,
    mu: int = 1,
    *,
    order: int = 0,
    m_start: int = 1,
    m_stop: int | None = None,
    options: Options | None = None,
) -> tuple[complex, int]:
    """Prefactored correction series with shift direction ``mu``.

    Sums summands ``m = m_start .. m_stop`` (default ``M``) in ascending order.

    Returns
    -------
    :
        The sum and the number of summands charged, ``v + 1`` per summand.
    """
    s = _pole_free_argument(s)
    if mu not in (1, -1):
        raise DomainError(f'mu must be +1 or -1, got {mu}.')
    if m_start < 1:
        raise DomainError(f'Correction summands start at m = 1, got {m_start}.')
    order = _check_order(order, (0, 1, 2))
    options = resolve_options(options)
    backend = initial_backend(options)
    m_stop = p.M if m_stop is None else m_stop
    acc, _ = correction_series(
        backend.scalar(s),
        p.v,
        p.N,
        mu,
        range(m_start, m_stop + 1),
        backend,
        tolerance=tail_tolerance(p.delta, p.M),
        max_terms=options.max_tail_terms,
        order=order,
    )
    return backend.to_complex(acc.total), (p.v + 1) * max(m_stop - m_start + 1, 0)


def e1_sum(
    s: complex, p: EvalParams, *, order: int = 0, options: Options | None = None
) -> tuple[complex, int]:
    """The correction series kept by certified evaluation, ``mu = +1``."""
    return e_sum(s, p, 1, order=order, options=options)


def correction_term(
    s: complex, p: EvalParams, *, order: int = 0, options: Options | None = None
) -> complex:
    """``Gamma(1-s+v) N^{1-s} / ((1-s) Gamma(v))`` or its derivatives.

    Raises
    ------
    zetafast.PoleError
        At ``s = 1``.
    """
    s = _pole_free_argument(s)
    order = _check_order(order, (0, 1, 2))
    backend = initial_backend(resolve_options(options))
    value, _ = _correction_value(backend.scalar(s), p, backend, order)
    return backend.to_complex(value)
