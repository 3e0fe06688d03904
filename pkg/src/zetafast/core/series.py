# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Series kernels shared by the zeta and L-function evaluators.

Two kinds of series are evaluated here, both in any :class:`Backend`:

Smoothed Dirichlet sums
    ``sum_n weight(n) n^{-s} Q(v, n/N) (-ln n)^k``.

Binomial tails of the correction series
    For ``z = i mu shift / (2 pi N)`` and ``u = m + z`` the prefactored summand

    .. math::

        (2\\pi)^{s-1} e^{i\\mu\\pi(1-s)/2} F \\Gamma(1-s) E_\\mu(m, s)
        = \\sum_{w \\ge v} \\exp\\Big[\\log\\Gamma(1-s+w) - \\log w!
          + (s-1-w)\\log u + w \\log z + (s-1)\\log 2\\pi
          + i\\mu\\pi(1-s)/2 + \\log F\\Big]

    where ``F`` is an optional extra factor given by its logarithm.
    This is the convergent remainder of the binomial series of ``m^{s-1}``
    about ``u``. All gamma and exponential factors are combined in log space
    and exponentiated once per term, so nothing overflows for large ``Im s``.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import Any

import numpy as np
import numpy.typing as npt

from .errors import NonConvergenceError
from .numerics import q_cutoff_array
from .precision import Backend
from .summation import SeriesAccumulator

_D_BLOCK_SIZE = 1 << 16
_FIRST_TAIL_CHUNK = 64


def dirichlet_block(
    s: Any,
    v: int,
    N: float,
    start: int,
    stop: int,
    backend: Backend,
    *,
    order: int = 0,
    weights: npt.NDArray[Any] | None = None,
) -> tuple[npt.NDArray[Any], npt.NDArray[Any]]:
    """Terms ``n = start .. stop - 1`` of a smoothed Dirichlet sum.

    Returns
    -------
    :
        The terms and the exponents they were obtained from.
    """
    n = backend.reals(np.arange(start, stop))
    log_n = backend.log(n)
    exponents = log_n * (-s)
    terms = backend.exp(exponents) * q_cutoff_array(v, n / backend.real(N), backend)
    if order:
        terms = terms * (-log_n) ** order
    if weights is not None:
        terms = terms * weights
    return terms, exponents


def dirichlet_series(
    s: Any,
    v: int,
    N: float,
    stop: int,
    backend: Backend,
    *,
    start: int = 1,
    order: int = 0,
    weights: Any = None,
) -> SeriesAccumulator:
    """Sum ``n = start .. stop`` (inclusive) of a smoothed Dirichlet series.

    Terms are accumulated in ascending order of ``n``.

    Parameters
    ----------
    weights:
        Callable mapping an integer array ``n`` to the weights of the terms,
        or ``None`` for unit weights.
    """
    acc = SeriesAccumulator(backend)
    for lo in range(start, stop + 1, _D_BLOCK_SIZE):
        hi = min(lo + _D_BLOCK_SIZE, stop + 1)
        w = None if weights is None else weights(np.arange(lo, hi))
        acc.add(*dirichlet_block(s, v, N, lo, hi, backend, order=order, weights=w))
    return acc


class _TailChunk:
    """m-independent quantities of binomial tail terms ``w in [lo, hi)``."""

    __slots__ = ('a_abs', 'digamma', 'log_coeff', 'trigamma', 'w', 'w_float')

    def __init__(
        self,
        lo: int,
        hi: int,
        s: Any,
        const: Any,
        backend: Backend,
        order: int,
        trigamma_start: Any,
    ) -> None:
        w = np.arange(lo, hi)
        self.w_float = w.astype(np.float64)
        self.w = backend.reals(w)
        a = self.w + (1 - s)
        self.a_abs = backend.magnitude(a)
        self.log_coeff = (
            backend.loggamma(a) - backend.loggamma(backend.reals(w + 1)) + const
        )
        self.digamma = backend.digamma(a) if order >= 1 else None
        self.trigamma = None
        if order >= 2:
            # psi'(a + k) = psi'(a) - sum_{j<k} 1 / (a + j)^2
            steps = 1 / (a * a)
            partial = np.cumsum(steps) - steps
            self.trigamma = partial * (-1) + trigamma_start


class TailTable:
    """Lazily grown table of the m-independent part of binomial tail terms.

    Parameters
    ----------
    s:
        Backend scalar.
    v:
        First index of the tail.
    mu:
        Direction of the shift, +1 or -1.
    log_factor:
        Logarithm of an extra constant factor, a backend scalar.
    """

    def __init__(
        self,
        s: Any,
        v: int,
        mu: int,
        backend: Backend,
        *,
        order: int = 0,
        log_factor: Any = 0,
    ) -> None:
        self.s = s
        self._v = v
        self.backend = backend
        self._order = order
        log_two_pi = backend.log(backend.real(2) * backend.pi)
        half_turn = backend.scalar(1j * mu) * backend.pi / 2
        self.const = (s - 1) * log_two_pi + half_turn * (1 - s) + log_factor
        self.dlog_const = log_two_pi - half_turn
        self._chunks: list[_TailChunk] = []
        self._bounds: list[tuple[int, int]] = []
        self._trigamma_next = (
            backend.trigamma(np.array([v + (1 - s)], dtype=object))[0]
            if order >= 2
            else None
        )

    def chunk(self, index: int) -> _TailChunk:
        while len(self._chunks) <= index:
            lo = self._bounds[-1][1] if self._bounds else self._v
            size = _FIRST_TAIL_CHUNK << len(self._chunks)
            chunk = _TailChunk(
                lo,
                lo + size,
                self.s,
                self.const,
                self.backend,
                self._order,
                self._trigamma_next,
            )
            if self._order >= 2:
                last = chunk.w[-1] + (1 - self.s)
                self._trigamma_next = chunk.trigamma[-1] - 1 / (last * last)
            self._chunks.append(chunk)
            self._bounds.append((lo, lo + size))
        return self._chunks[index]


def binomial_tail(
    table: TailTable,
    m: int,
    mu: int,
    shift: float,
    N: float,
    tolerance: float,
    max_terms: int,
    *,
    order: int = 0,
    dlog_factor: Any = 0,
) -> tuple[npt.NDArray[Any], npt.NDArray[Any], int]:
    """Terms of the prefactored binomial tail of correction summand ``m``.

    Terms are produced until the geometric bound on the remainder,
    ``|t_k| rho / (1 - rho)`` with ``rho`` bounding all later term ratios,
    drops below ``tolerance``.
    For derivatives the bound is scaled by ``(1 + |d/ds log t_k|)^order``.

    Returns
    -------
    :
        The terms, their exponents and the number of terms.

    Raises
    ------
    zetafast.NonConvergenceError
        If the stopping rule is not met within ``max_terms`` terms.
    """
    backend = table.backend
    z_abs = shift / (2 * math.pi * N)
    z_scale = backend.real(shift) / (2 * backend.pi * backend.real(N))
    z = backend.scalar(1j * mu) * z_scale
    u = backend.real(m) + z
    log_u = backend.log(u)
    log_ratio = backend.log(z_scale) + backend.scalar(1j * mu) * backend.pi / 2 - log_u
    base = (table.s - 1) * log_u
    shrink = z_abs / abs(backend.to_complex(u))
    dlog_base = log_u + table.dlog_const + dlog_factor
    log_tolerance = math.log(tolerance)

    term_blocks = []
    exponent_blocks = []
    produced = 0
    index = 0
    while produced < max_terms:
        chunk = table.chunk(index)
        exponents = chunk.log_coeff + base + chunk.w * log_ratio
        terms = backend.exp(exponents)
        log_magnitudes = backend.real_part(exponents)
        ratios = np.maximum(chunk.a_abs * shrink / (chunk.w_float + 1), shrink)
        # log of |t_k| rho / (1 - rho), infinite while the terms may still grow
        log_bound = np.full_like(ratios, np.inf)
        shrinking = ratios < 1
        log_bound[shrinking] = (
            log_magnitudes[shrinking]
            + np.log(ratios[shrinking])
            - np.log1p(-ratios[shrinking])
        )
        if order:
            dlog = chunk.digamma * (-1) + dlog_base
            log_bound = log_bound + order * np.log1p(backend.magnitude(dlog))
            if order == 1:
                terms = terms * dlog
            else:
                terms = terms * (dlog * dlog + chunk.trigamma)
        done = np.flatnonzero(log_bound < log_tolerance)
        if done.size:
            stop = int(done[0]) + 1
            if produced + stop > max_terms:
                break
            term_blocks.append(terms[:stop])
            exponent_blocks.append(exponents[:stop])
            produced += stop
            return np.concatenate(term_blocks), np.concatenate(exponent_blocks), produced
        term_blocks.append(terms)
        exponent_blocks.append(exponents)
        produced += len(terms)
        index += 1
    raise NonConvergenceError(
        f'Binomial tail of correction summand m={m}, mu={mu} did not converge '
        f'within {max_terms} terms (tolerance {tolerance:.3g}).'
    )


def correction_series(
    s: Any,
    v: int,
    N: float,
    mu: int,
    ms: Sequence[int],
    backend: Backend,
    *,
    tolerance: float,
    max_terms: int,
    order: int = 0,
    shift: float = 1.0,
    weights: Sequence[complex] | None = None,
    log_factor: Any = 0,
    dlog_factor: Any = 0,
) -> tuple[SeriesAccumulator, int]:
    """Sum of prefactored correction summands over ``ms`` in the given order.

    Parameters
    ----------
    weights:
        Weight of each summand, aligned with ``ms``. Zero weights skip the summand.
    log_factor, dlog_factor:
        Logarithm of an extra constant factor and its derivative with respect to s.

    Returns
    -------
    :
        Accumulated series and number of tail terms evaluated.
    """
    table = TailTable(s, v, mu, backend, order=order, log_factor=log_factor)
    acc = SeriesAccumulator(backend)
    tail_terms = 0
    for i, m in enumerate(ms):
        weight = 1 if weights is None else weights[i]
        if weight == 0:
            continue
        terms, exponents, count = binomial_tail(
            table,
            m,
            mu,
            shift,
            N,
            tolerance,
            max_terms,
            order=order,
            dlog_factor=dlog_factor,
        )
        tail_terms += count
        acc.add(terms if weight == 1 else terms * weight, exponents)
    return acc, tail_terms


def tail_tolerance(delta: float, M: int) -> float:
    """Stopping tolerance per correction summand."""
    return delta * 1e-3 / (M * 10)
