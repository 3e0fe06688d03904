# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Hardy's Z function and zeros of the zeta function on the critical line.

``Z(t) = exp(i theta(t)) zeta(1/2 + i t)`` is real for real ``t`` and changes
sign at every zero of odd multiplicity. :func:`find_zeros` samples ``Z`` on a
uniform grid and refines each sign change by bisection. Pairs of zeros closer
than the grid step may be missed.
"""

from __future__ import annotations

import dataclasses
import math
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import numpy.typing as npt
from scipy import optimize

from .config import Engine, Options
from .core.errors import DomainError
from .core.numerics import log_gamma
from .engine import zeta
from .logging import get_logger
from .oracle import zeta_em

DEFAULT_DELTA = 1e-8
MAX_GRID_STEP = 0.25
BISECTION_XTOL = 1e-8

_LOG_PI = math.log(math.pi)


def rs_theta(t: float) -> float:
    """Riemann-Siegel theta function ``Im log Gamma(1/4 + i t/2) - (t/2) log pi``.

    The log-gamma branch is continuous in ``t``, so no unwinding is needed.

    Raises
    ------
    zetafast.DomainError
        If ``t <= 0``.
    """
    t = float(t)
    if not (t > 0 and math.isfinite(t)):
        raise DomainError(f'theta requires finite t > 0, got {t}.')
    return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * _LOG_PI


def hardy_z_complex(
    t: float,
    delta: float = DEFAULT_DELTA,
    *,
    engine: Engine | str = Engine.zetafast,
    options: Options | None = None,
) -> complex:
    """``exp(i theta(t)) zeta(1/2 + i t)`` including the imaginary residual."""
    s = complex(0.5, t)
    if Engine(engine) is Engine.oracle:
        value = zeta_em(s)
    else:
        value = zeta(s, delta, options=options).value
    theta = rs_theta(t)
    return complex(math.cos(theta), math.sin(theta)) * value


def hardy_z(
    t: float,
    delta: float = DEFAULT_DELTA,
    *,
    engine: Engine | str = Engine.zetafast,
    options: Options | None = None,
) -> float:
    """Hardy's Z function.

    A warning is logged if the imaginary residual exceeds ``10 delta``.

    Examples
    --------

      >>> import zetafast as zf
      >>> zf.hardy_z(20.0) > 0
      True
    """
    value = hardy_z_complex(t, delta, engine=engine, options=options)
    if abs(value.imag) > 10 * delta:
        get_logger().warning(
            'Z(%s) has imaginary residual %.3g > 10 delta = %.3g.',
            t,
            abs(value.imag),
            10 * delta,
        )
    return value.real


@dataclasses.dataclass(frozen=True, slots=True)
class ZeroBracket:
    """Interval ``[t_lo, t_hi]`` with a sign change of Z."""

    t_lo: float
    t_hi: float
    z_lo: float
    z_hi: float

    def __post_init__(self) -> None:
        if not self.t_lo < self.t_hi:
            raise DomainError(f'Empty bracket [{self.t_lo}, {self.t_hi}].')
        if not self.z_lo * self.z_hi < 0:
            raise DomainError(
                f'No sign change in [{self.t_lo}, {self.t_hi}]: '
                f'Z = {self.z_lo}, {self.z_hi}.'
            )


def scan_grid(t0: float, t1: float, grid_step: float) -> npt.NDArray[np.float64]:
    """Uniform grid on ``[t0, t1]`` with spacing at most ``grid_step``, ``t > 0``."""
    t0 = float(t0)
    t1 = float(t1)
    if not (0 <= t0 < t1 and math.isfinite(t1)):
        raise DomainError(f'Scanning requires 0 <= t0 < t1, got t0={t0}, t1={t1}.')
    if not 0 < grid_step <= MAX_GRID_STEP:
        raise DomainError(
            f'The grid step must lie in (0, {MAX_GRID_STEP}], got {grid_step}.'
        )
    points = np.linspace(t0, t1, math.ceil((t1 - t0) / grid_step) + 1)
    return points[points > 0]


def _map(
    func: Callable[[float], float], values: Iterable[float], workers: int | None
) -> list[float]:
    if workers is None or workers <= 1:
        return [func(value) for value in values]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, values))


def find_zeros(
    t0: float,
    t1: float,
    delta: float = DEFAULT_DELTA,
    grid_step: float = 0.05,
    *,
    engine: Engine | str = Engine.zetafast,
    workers: int | None = None,
    options: Options | None = None,
) -> list[tuple[ZeroBracket, float]]:
    """Locate zeros of ``zeta(1/2 + i t)`` for ``t0 <= t <= t1``.

    Parameters
    ----------
    t0, t1:
        Scanned interval, ``0 <= t0 < t1``.
    delta:
        Accuracy of each evaluation.
    grid_step:
        Spacing of the sampling grid, at most 0.25.
    engine:
        Evaluator of the zeta function.
    workers:
        Number of threads sampling the grid. Results do not depend on it.
    options:
        Evaluation options of the ``zetafast`` engine.

    Returns
    -------
    :
        Brackets and refined zeros in increasing order. Each zero is
        located to within ``1e-8``.
    """
    engine = Engine(engine)
    logger = get_logger()
    grid = scan_grid(t0, t1, grid_step).tolist()

    def z(t: float) -> float:
        return hardy_z(t, delta, engine=engine, options=options)

    logger.info('Sampling Z at %d points in [%s, %s].', len(grid), t0, t1)
    values = _map(z, grid, workers)
    brackets = [
        ZeroBracket(grid[i], grid[i + 1], values[i], values[i + 1])
        for i in range(len(grid) - 1)
        if values[i] * values[i + 1] < 0
    ]
    for i, value in enumerate(values):
        if value == 0.0:
            logger.warning('Z vanishes exactly at grid point t=%s, skipped.', grid[i])
    logger.info('Refining %d sign changes.', len(brackets))
    zeros = [
        (
            bracket,
            float(
                optimize.bisect(z, bracket.t_lo, bracket.t_hi, xtol=BISECTION_XTOL)
            ),
        )
        for bracket in brackets
    ]
    return zeros
