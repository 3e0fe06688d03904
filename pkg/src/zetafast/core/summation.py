# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Compensated summation of series with roundoff bookkeeping."""

from __future__ import annotations

from typing import Any

import numpy as np
import numpy.typing as npt

from .precision import Backend

# Rounding errors of one exp/log/multiply chain measured in units of epsilon.
_BASE_OPERATION_ERROR = 4.0


class SeriesAccumulator:
    """Accumulates a complex series block by block.

    Every block is summed like :func:`math.fsum` with a single rounding, and the
    block sums are summed the same way. The total is therefore rounded at most
    twice, however the terms are split into blocks.

    Besides the sum, the accumulator tracks

    - ``count``: number of terms added,
    - ``max_term``: the largest term magnitude,
    - ``condition``: ``sum(|term| * (4 + |exponent|))`` where ``exponent`` is the
      argument passed to the single ``exp`` producing the term.
      Multiplied by the machine epsilon this bounds the absolute roundoff.
    - ``last_term`` and ``last_block``: magnitudes of the last term and of the
      sum of the last block.

    Parameters
    ----------
    backend:
        Backend the terms live in.
    """

    def __init__(self, backend: Backend) -> None:
        self._backend = backend
        self._partials: list[Any] = []
        self.count = 0
        self.max_term = 0.0
        self.condition = 0.0
        self.last_term = 0.0
        self.last_block = 0.0

    def add(
        self, terms: npt.NDArray[Any], exponents: npt.NDArray[Any] | None = None
    ) -> None:
        """Add a block of terms in order."""
        if len(terms) == 0:
            return
        magnitudes = self._backend.magnitude(terms)
        block = self._backend.fsum(terms)
        self._partials.append(block)
        self.last_term = float(magnitudes[-1])
        self.last_block = abs(self._backend.to_complex(block))
        self.count += len(magnitudes)
        self.max_term = max(self.max_term, float(magnitudes.max()))
        if exponents is None:
            weights = _BASE_OPERATION_ERROR
        else:
            weights = _BASE_OPERATION_ERROR + self._backend.magnitude(exponents)
        self.condition += float(np.sum(magnitudes * weights))

    def add_value(self, value: Any, exponent: Any | None = None) -> None:
        """Add a single term."""
        self.add(
            np.array([value], dtype=object if self._is_object else np.complex128),
            None
            if exponent is None
            else np.array([exponent], dtype=object if self._is_object else None),
        )

    @property
    def _is_object(self) -> bool:
        return self._backend.precision.is_extended

    @property
    def total(self) -> Any:
        """Sum of all terms as a backend scalar."""
        if not self._partials:
            return self._backend.scalar(0)
        return self._backend.fsum(
            np.array(self._partials, dtype=object if self._is_object else np.complex128)
        )

    @property
    def roundoff_estimate(self) -> float:
        """Absolute roundoff bound of :attr:`total`."""
        return self._backend.epsilon * self.condition

    def cancellation_ratio(self) -> float:
        """``max_term / |total|``, ``inf`` if the terms cancel exactly."""
        if self.max_term == 0.0:
            return 0.0
        total = abs(self._backend.to_complex(self.total))
        if total == 0.0:
            return float('inf')
        return self.max_term / total
