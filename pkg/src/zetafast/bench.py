# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Measured summand counts and timings against the explicit summand bound."""

from __future__ import annotations

import csv
import dataclasses
import itertools
import math
import os
import time
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor

from .config import Options
from .engine import zeta
from .logging import get_logger
from .oracle import zeta_em
from .params import speed_precondition, summand_bound
from .utils.to_string import value_to_string

DEFAULT_ORACLE_MAX_TAU = 1e4


@dataclasses.dataclass(frozen=True, slots=True)
class BenchRecord:
    """One benchmarked certified evaluation.

    Parameters
    ----------
    sigma, tau, delta:
        Evaluation point and accuracy.
    summands_measured:
        Summands charged to the evaluation.
    summands_bound:
        The bound of :func:`zetafast.summand_bound`, NaN if it does not apply.
    precondition_ok:
        Whether :func:`zetafast.speed_precondition` holds.
    wall_time:
        Duration of the evaluation in seconds.
    abs_error_vs_oracle:
        Distance to :func:`zetafast.zeta_em`, ``None`` if the oracle was skipped.
    """

    sigma: float
    tau: float
    delta: float
    summands_measured: int
    summands_bound: float
    precondition_ok: bool
    wall_time: float
    abs_error_vs_oracle: float | None = None

    @property
    def within_bound(self) -> bool:
        """Whether the measured count respects the bound wherever it applies."""
        return not self.precondition_ok or self.summands_measured <= self.summands_bound

    @property
    def bound_ratio(self) -> float:
        if not self.precondition_ok:
            return math.nan
        return self.summands_measured / self.summands_bound


def bench_point(
    sigma: float,
    tau: float,
    delta: float,
    *,
    oracle_max_tau: float = DEFAULT_ORACLE_MAX_TAU,
    options: Options | None = None,
) -> BenchRecord:
    """Time a single certified evaluation of ``zeta(sigma + i tau)``."""
    s = complex(sigma, tau)
    start = time.perf_counter()
    result = zeta(s, delta, options=options)
    wall_time = time.perf_counter() - start
    precondition_ok = speed_precondition(tau, delta)
    bound = summand_bound(sigma, tau, delta) if precondition_ok else math.nan
    error = None
    if abs(tau) <= oracle_max_tau:
        error = abs(result.value - zeta_em(s))
    else:
        get_logger().warning(
            'Skipping oracle comparison at tau=%s above oracle_max_tau=%s.',
            tau,
            oracle_max_tau,
        )
    return BenchRecord(
        sigma=float(sigma),
        tau=float(tau),
        delta=float(delta),
        summands_measured=result.summands_used,
        summands_bound=bound,
        precondition_ok=precondition_ok,
        wall_time=wall_time,
        abs_error_vs_oracle=error,
    )


def run_bench(
    taus: Iterable[float],
    deltas: Iterable[float],
    sigmas: Iterable[float] = (0.5,),
    *,
    oracle_max_tau: float = DEFAULT_ORACLE_MAX_TAU,
    workers: int | None = None,
    options: Options | None = None,
) -> list[BenchRecord]:
    """Benchmark every combination of ``sigmas``, ``taus`` and ``deltas``.

    Records are returned in the order of :func:`itertools.product`
    over ``(sigmas, taus, deltas)`` regardless of ``workers``.
    """
    grid = list(itertools.product(sigmas, taus, deltas))
    logger = get_logger()
    logger.info('Benchmarking %d points.', len(grid))

    def run(point: tuple[float, float, float]) -> BenchRecord:
        record = bench_point(
            *point, oracle_max_tau=oracle_max_tau, options=options
        )
        logger.info(
            'sigma=%s tau=%s delta=%s: %d summands, bound %.6g, %.3g s',
            *point,
            record.summands_measured,
            record.summands_bound,
            record.wall_time,
        )
        return record

    if workers is None or workers <= 1:
        return [run(point) for point in grid]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(run, grid))


def bench_fields() -> list[str]:
    return [field.name for field in dataclasses.fields(BenchRecord)]


def write_bench_csv(
    records: Sequence[BenchRecord], path: str | os.PathLike[str]
) -> None:
    """Write records with a header row, one column per :class:`BenchRecord` field."""
    fields = bench_fields()
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(fields)
        for record in records:
            writer.writerow(value_to_string(getattr(record, name)) for name in fields)
