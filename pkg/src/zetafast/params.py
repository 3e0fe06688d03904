# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Parameter selection for the smoothed series representation.

Given ``s = sigma + i tau`` and a target accuracy ``delta``, the cutoff order
``v`` is the next integer above the root ``x0`` of

.. math::

    x - \\max\\left(\\frac{1-\\sigma}{2}, 0\\right) \\ln(1/2 + x + \\tau)
    = \\ln(8/\\delta),

the smoothing scale is ``N = 1.11 * sqrt(1 + (1/2 + tau) / v)``, ``M = ceil(N)``
correction summands are kept and the main sum is cut off at ``ceil(3.151 v N)``.
For ``0 <= sigma <= 2`` and ``delta <= 0.05`` this choice guarantees a
truncation error below ``delta``.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from typing import Any

from scipy import optimize

from .core.errors import DomainError, InvalidAccuracyError, PreconditionError
from .core.numerics import as_complex

LAMBDA = 3.151
"""Cutoff factor of the main sum."""
N_SCALE = 1.11
"""Prefactor of the smoothing scale."""
MIN_ORDER = 5
MAX_CERTIFIED_DELTA = 0.05
CERTIFIED_SIGMA_RANGE = (0.0, 2.0)

_ROOT_XTOL = 1e-9
_NEWTON_STEPS = 3


class Mode(enum.Enum):
    """Whether an evaluation must carry an error certificate."""

    certified = 'certified'
    heuristic = 'heuristic'

    def __str__(self) -> str:
        return self.value


@dataclasses.dataclass(frozen=True, slots=True)
class RequestedEvaluation:
    """A point and accuracy to evaluate at.

    Certified requests are validated on construction.
    """

    s: complex
    delta: float
    mode: Mode = Mode.certified

    def __post_init__(self) -> None:
        object.__setattr__(self, 's', as_complex(self.s, 's'))
        object.__setattr__(self, 'mode', Mode(self.mode))
        object.__setattr__(self, 'delta', check_delta(self.delta, self.mode))
        if self.mode is Mode.certified and not in_certified_strip(self.sigma):
            lo, hi = CERTIFIED_SIGMA_RANGE
            raise DomainError(
                f'Certified evaluation requires {lo:g} <= Re s <= {hi:g}, '
                f'got Re s = {self.sigma}. Use heuristic mode instead.'
            )

    @property
    def sigma(self) -> float:
        return self.s.real

    @property
    def tau(self) -> float:
        return self.s.imag


@dataclasses.dataclass(frozen=True, slots=True)
class EvalParams:
    """Truncation parameters of one evaluation.

    Parameters
    ----------
    v:
        Order of the incomplete gamma cutoff.
    N:
        Smoothing scale.
    M:
        Number of correction summands, ``ceil(N)``.
    delta:
        Target accuracy.
    certified:
        Whether the truncation error is proven to be below ``delta``.
    lambda_:
        Cutoff factor of the main sum.
    x0:
        Real root the order was derived from.
    sigma, tau:
        The point the parameters were derived for, ``tau >= 0``.
    """

    v: int
    N: float
    M: int
    delta: float
    certified: bool
    lambda_: float = LAMBDA
    x0: float = math.nan
    sigma: float = math.nan
    tau: float = math.nan

    def __post_init__(self) -> None:
        if self.v < MIN_ORDER:
            raise DomainError(f'The cutoff order must be >= {MIN_ORDER}, got {self.v}.')
        if not self.N > 1.0:
            raise DomainError(f'The smoothing scale must exceed 1, got {self.N}.')
        if self.M < 2 or self.M < self.N:
            raise DomainError(f'Invalid number of correction summands {self.M}.')

    @property
    def d_cutoff(self) -> int:
        """Number of terms of the main sum, ``ceil(lambda v N)``."""
        return math.ceil(self.lambda_ * self.v * self.N)

    def summand_count(self, *, correction_series: int = 1) -> int:
        """Number of summands charged to an evaluation.

        Every correction summand is charged ``v + 1`` terms.
        """
        return self.d_cutoff + correction_series * (self.v + 1) * self.M

    def to_dict(self) -> dict[str, Any]:
        return {
            'v': self.v,
            'N': self.N,
            'M': self.M,
            'lambda': self.lambda_,
            'delta': self.delta,
            'certified': self.certified,
            'x0': self.x0,
            'd_cutoff': self.d_cutoff,
        }


def in_certified_strip(sigma: float) -> bool:
    lo, hi = CERTIFIED_SIGMA_RANGE
    return lo <= sigma <= hi


def check_delta(delta: float, mode: Mode = Mode.certified) -> float:
    """Validate a target accuracy.

    Raises
    ------
    zetafast.InvalidAccuracyError
        If ``delta`` is not positive and finite, or exceeds 0.05 in certified mode.
    """
    try:
        delta = float(delta)
    except (TypeError, ValueError) as err:
        raise InvalidAccuracyError(f'Invalid accuracy {delta!r}.') from err
    if not (delta > 0.0 and math.isfinite(delta)):
        raise InvalidAccuracyError(f'The accuracy must be positive, got {delta}.')
    if Mode(mode) is Mode.certified and delta > MAX_CERTIFIED_DELTA:
        raise InvalidAccuracyError(
            f'Certified evaluation requires delta <= {MAX_CERTIFIED_DELTA}, '
            f'got {delta}. Use heuristic mode instead.'
        )
    return delta


def _check_tau(tau: float) -> float:
    tau = float(tau)
    if not (tau >= 0.0 and math.isfinite(tau)):
        raise DomainError(f'tau must be finite and >= 0, got {tau}.')
    return tau


def _log_weight(sigma: float) -> float:
    return max((1.0 - sigma) / 2.0, 0.0)


def order_equation_residual(x: float, sigma: float, tau: float, delta: float) -> float:
    """Left minus right hand side of the equation defining ``x0``."""
    return x - _log_weight(sigma) * math.log(0.5 + x + tau) - math.log(8.0 / delta)


def solve_x0(
    sigma: float, tau: float, delta: float, mode: Mode = Mode.certified
) -> float:
    """Return the root ``x0 >= 5`` of the order equation.

    Solved by bisection to an absolute tolerance of 1e-9 followed by three
    Newton steps.
    In heuristic mode accuracies so coarse that the root lies below 5 yield 5.
    """
    delta = check_delta(delta, mode)
    tau = _check_tau(tau)
    sigma = float(sigma)
    weight = _log_weight(sigma)

    def residual(x: float) -> float:
        return order_equation_residual(x, sigma, tau, delta)

    lo = float(MIN_ORDER)
    if residual(lo) >= 0.0:
        return lo
    log_target = math.log(8.0 / delta)
    hi = log_target + math.log(0.5 + log_target + tau) + 2.0
    while residual(hi) <= 0.0:
        hi *= 2.0
    x = float(optimize.bisect(residual, lo, hi, xtol=_ROOT_XTOL))
    for _ in range(_NEWTON_STEPS):
        slope = 1.0 - weight / (0.5 + x + tau)
        x -= residual(x) / slope
    return x


def solve_v(sigma: float, tau: float, delta: float, mode: Mode = Mode.certified) -> int:
    """Return the cutoff order ``ceil(x0)``.

    Parameters
    ----------
    sigma:
        Real part of ``s``.
    tau:
        Absolute value of the imaginary part of ``s``.
    delta:
        Target accuracy, at most 0.05 in certified mode.
    mode:
        Evaluation mode.

    Examples
    --------

      >>> import zetafast as zf
      >>> zf.solve_v(1.0, 10.0, 0.05)
      6
    """
    return math.ceil(solve_x0(sigma, tau, delta, mode))


def derive_params(
    sigma: float, tau: float, delta: float, mode: Mode = Mode.certified
) -> EvalParams:
    """Derive all truncation parameters for ``s = sigma + i tau``.

    In heuristic mode the order is raised to at least ``floor(sigma) + 2`` so that
    the series representation converges.
    ``certified`` is set only in certified mode for ``0 <= sigma <= 2``.
    """
    mode = Mode(mode)
    sigma = float(sigma)
    x0 = solve_x0(sigma, tau, delta, mode)
    tau = float(tau)
    v = math.ceil(x0)
    if mode is Mode.heuristic:
        v = max(v, math.floor(sigma) + 2)
    smoothing = N_SCALE * math.sqrt(1.0 + (0.5 + tau) / v)
    return EvalParams(
        v=v,
        N=smoothing,
        M=math.ceil(smoothing),
        delta=float(delta),
        certified=mode is Mode.certified and in_certified_strip(sigma),
        x0=x0,
        sigma=sigma,
        tau=tau,
    )


def derive_l_params(sigma: float, tau: float, delta: float, q: int) -> EvalParams:
    """Derive truncation parameters for a Dirichlet L-function of modulus ``q``.

    The order is solved for ``delta / q`` and the smoothing scale grows with
    ``sqrt(q)``, which keeps the binomial shift ``q / (2 pi N)`` of the correction
    series at the size it has for the zeta function.
    The result is never certified.
    """
    if q < 1:
        raise DomainError(f'The modulus must be positive, got {q}.')
    delta = check_delta(delta, Mode.heuristic)
    sigma = float(sigma)
    x0 = solve_x0(sigma, tau, delta / q, Mode.heuristic)
    tau = float(tau)
    v = max(math.ceil(x0), math.floor(sigma) + 2)
    smoothing = N_SCALE * math.sqrt(q * (1.0 + (0.5 + tau) / v))
    return EvalParams(
        v=v,
        N=smoothing,
        M=math.ceil(smoothing),
        delta=delta,
        certified=False,
        x0=x0,
        sigma=sigma,
        tau=tau,
    )


def speed_precondition(tau: float, delta: float) -> bool:
    """Return whether ``tau > (5/3)(3/2 + ln(8/delta))``.

    Under this condition :func:`summand_bound` bounds the number of summands.
    """
    delta = check_delta(delta, Mode.heuristic)
    return float(tau) > (5.0 / 3.0) * (1.5 + math.log(8.0 / delta))


def summand_bound(sigma: float, tau: float, delta: float) -> float:
    """Upper bound on the number of summands of one evaluation.

    .. math::

        S = 2 + 8 \\sqrt{1 + \\ln(8/\\delta)
            + \\max((1-\\sigma)/2, 0) \\ln(2\\tau)} \\sqrt{\\tau}

    Raises
    ------
    zetafast.PreconditionError
        If :func:`speed_precondition` does not hold.
    """
    if not speed_precondition(tau, delta):
        raise PreconditionError(
            f'The summand bound requires tau > (5/3)(3/2 + ln(8/delta)), '
            f'got tau={tau}, delta={delta}.'
        )
    tau = float(tau)
    inner = 1.0 + math.log(8.0 / delta) + _log_weight(float(sigma)) * math.log(2 * tau)
    return 2.0 + 8.0 * math.sqrt(inner) * math.sqrt(tau)
