# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Working precision and the numeric backends series are evaluated with.

Two backends implement the same small set of elementwise operations:

- :class:`HardwareBackend` works on numpy ``complex128`` arrays and uses
  :mod:`scipy.special` for the gamma family.
- :class:`ExtendedBackend` works on numpy object arrays holding :mod:`mpmath`
  numbers of a private context with fixed precision.

Code written against :class:`Backend` therefore runs unchanged in either precision.
"""

from __future__ import annotations

import abc
import dataclasses
import functools
import math
from typing import Any

import mpmath
import numpy as np
import numpy.typing as npt
from mpmath.libmp import dps_to_prec
from scipy import special

from .errors import DomainError

_HARDWARE_DIGITS = 15


@dataclasses.dataclass(frozen=True, slots=True)
class WorkingPrecision:
    """Precision of the arithmetic an evaluation runs in.

    Parameters
    ----------
    significant_decimal_digits:
        Number of significant decimal digits, at least 15.
        Exactly 15 denotes hardware binary floating point.
    machine_epsilon:
        Spacing of numbers near 1, at most ``10**(1 - significant_decimal_digits)``.
    """

    significant_decimal_digits: int
    machine_epsilon: float

    def __post_init__(self) -> None:
        if self.significant_decimal_digits < _HARDWARE_DIGITS:
            raise DomainError(
                'The working precision must carry at least '
                f'{_HARDWARE_DIGITS} significant digits, '
                f'got {self.significant_decimal_digits}.'
            )
        if not 0.0 < self.machine_epsilon <= 10.0 ** (
            1 - self.significant_decimal_digits
        ):
            raise DomainError(
                f'Machine epsilon {self.machine_epsilon} does not match '
                f'{self.significant_decimal_digits} significant digits.'
            )

    @classmethod
    def hardware(cls) -> WorkingPrecision:
        """IEEE double precision."""
        return cls(_HARDWARE_DIGITS, float(np.finfo(np.float64).eps))

    @classmethod
    def extended(cls, digits: int) -> WorkingPrecision:
        """Software floating point with ``digits`` significant decimal digits."""
        if digits <= _HARDWARE_DIGITS:
            raise DomainError(
                f'Extended precision needs more than {_HARDWARE_DIGITS} digits, '
                f'got {digits}.'
            )
        return cls(digits, 2.0 ** (1 - dps_to_prec(digits)))

    @property
    def is_extended(self) -> bool:
        return self.significant_decimal_digits > _HARDWARE_DIGITS


class Backend(abc.ABC):
    """Elementwise arithmetic of one working precision.

    Array arguments are numpy arrays, either of a hardware dtype or of dtype object
    holding backend scalars. Scalars are Python / numpy numbers or backend scalars.
    """

    precision: WorkingPrecision

    @property
    @abc.abstractmethod
    def name(self) -> str:
        """Short name used in results and log messages."""

    @property
    def epsilon(self) -> float:
        return self.precision.machine_epsilon

    @property
    @abc.abstractmethod
    def pi(self) -> Any: ...

    @abc.abstractmethod
    def scalar(self, value: complex) -> Any:
        """Convert a complex number into a backend scalar."""

    @abc.abstractmethod
    def real(self, value: float) -> Any:
        """Convert a real number into a backend scalar."""

    @abc.abstractmethod
    def reals(self, values: npt.ArrayLike) -> npt.NDArray[Any]:
        """Convert an array of integers or floats into a backend array."""

    @abc.abstractmethod
    def exp(self, x: Any) -> Any: ...

    @abc.abstractmethod
    def expm1(self, x: Any) -> Any:
        """``exp(x) - 1`` without cancellation for small ``x``."""

    @abc.abstractmethod
    def log(self, x: Any) -> Any:
        """Principal logarithm for complex and natural logarithm for real input."""

    @abc.abstractmethod
    def loggamma(self, x: Any) -> Any:
        """Log-gamma, continuous away from the nonpositive real axis."""

    @abc.abstractmethod
    def digamma(self, x: Any) -> Any: ...

    @abc.abstractmethod
    def trigamma(self, x: Any) -> Any: ...

    @abc.abstractmethod
    def fsum(self, values: npt.ArrayLike) -> Any:
        """Sum with a single final rounding."""

    @abc.abstractmethod
    def magnitude(self, values: Any) -> npt.NDArray[np.float64]:
        """Absolute values as a float64 array."""

    @abc.abstractmethod
    def real_part(self, values: Any) -> npt.NDArray[np.float64]:
        """Real parts as a float64 array."""

    @abc.abstractmethod
    def to_complex(self, value: Any) -> complex: ...

    def __repr__(self) -> str:
        return (
            f'<{type(self).__name__} '
            f'digits={self.precision.significant_decimal_digits}>'
        )


class HardwareBackend(Backend):
    """Double precision via numpy and scipy."""

    def __init__(self) -> None:
        self.precision = WorkingPrecision.hardware()

    @property
    def name(self) -> str:
        return 'hardware'

    @property
    def pi(self) -> float:
        return math.pi

    def scalar(self, value: complex) -> complex:
        return complex(value)

    def real(self, value: float) -> float:
        return float(value)

    def reals(self, values: npt.ArrayLike) -> npt.NDArray[np.float64]:
        return np.asarray(values, dtype=np.float64)

    def exp(self, x: Any) -> Any:
        return np.exp(x)

    def expm1(self, x: Any) -> Any:
        return special.expm1(x)

    def log(self, x: Any) -> Any:
        return np.log(x)

    def loggamma(self, x: Any) -> Any:
        return special.loggamma(x)

    def digamma(self, x: Any) -> Any:
        return special.psi(x)

    def trigamma(self, x: Any) -> Any:
        # scipy has no complex polygamma
        x = np.asarray(x)
        values = extended_backend(20).trigamma(x.astype(np.complex128).astype(object))
        return np.array(
            [complex(value) for value in np.ravel(values)], dtype=np.complex128
        ).reshape(x.shape)

    def fsum(self, values: npt.ArrayLike) -> complex:
        array = np.ravel(np.asarray(values))
        return complex(math.fsum(array.real), math.fsum(array.imag))

    def magnitude(self, values: Any) -> npt.NDArray[np.float64]:
        return np.abs(np.asarray(values)).astype(np.float64)

    def real_part(self, values: Any) -> npt.NDArray[np.float64]:
        return np.real(np.asarray(values)).astype(np.float64)

    def to_complex(self, value: Any) -> complex:
        return complex(value)


class ExtendedBackend(Backend):
    """Software floating point via a private :class:`mpmath.MPContext`."""

    def __init__(self, digits: int) -> None:
        self.precision = WorkingPrecision.extended(digits)
        ctx = mpmath.MPContext()
        ctx.dps = digits
        self._ctx = ctx
        self._exp = np.frompyfunc(ctx.exp, 1, 1)
        self._expm1 = np.frompyfunc(ctx.expm1, 1, 1)
        self._log = np.frompyfunc(ctx.log, 1, 1)
        self._loggamma = np.frompyfunc(ctx.loggamma, 1, 1)
        self._digamma = np.frompyfunc(ctx.digamma, 1, 1)
        self._trigamma = np.frompyfunc(lambda z: ctx.psi(1, z), 1, 1)
        self._abs = np.frompyfunc(lambda z: float(abs(z)), 1, 1)
        self._re = np.frompyfunc(lambda z: float(ctx.re(z)), 1, 1)

    @property
    def name(self) -> str:
        return 'extended'

    @property
    def context(self) -> mpmath.ctx_mp.MPContext:
        return self._ctx

    @property
    def pi(self) -> Any:
        return +self._ctx.pi

    def scalar(self, value: complex) -> Any:
        if isinstance(value, self._ctx.mpc):
            return value
        return self._ctx.mpc(complex(value))

    def real(self, value: float) -> Any:
        return self._ctx.mpf(value)

    def reals(self, values: npt.ArrayLike) -> npt.NDArray[Any]:
        array = np.asarray(values)
        out = np.empty(array.shape, dtype=object)
        # tolist() yields Python ints and floats, which mpmath converts exactly
        out.ravel()[:] = [self._ctx.mpf(value) for value in array.ravel().tolist()]
        return out

    def exp(self, x: Any) -> Any:
        return self._exp(x)

    def expm1(self, x: Any) -> Any:
        return self._expm1(x)

    def log(self, x: Any) -> Any:
        return self._log(x)

    def loggamma(self, x: Any) -> Any:
        return self._loggamma(x)

    def digamma(self, x: Any) -> Any:
        return self._digamma(x)

    def trigamma(self, x: Any) -> Any:
        return self._trigamma(x)

    def fsum(self, values: npt.ArrayLike) -> Any:
        return self._ctx.fsum(np.ravel(np.asarray(values, dtype=object)))

    def magnitude(self, values: Any) -> npt.NDArray[np.float64]:
        return np.asarray(self._abs(values), dtype=np.float64)

    def real_part(self, values: Any) -> npt.NDArray[np.float64]:
        return np.asarray(self._re(values), dtype=np.float64)

    def to_complex(self, value: Any) -> complex:
        return complex(value)


@functools.cache
def hardware_backend() -> HardwareBackend:
    """Return the shared hardware backend."""
    return HardwareBackend()


@functools.lru_cache(maxsize=16)
def extended_backend(digits: int) -> ExtendedBackend:
    """Return a shared extended backend with ``digits`` significant digits.

    The precision of a backend never changes after construction,
    so instances can be shared between threads.
    """
    return ExtendedBackend(digits)


def make_backend(precision: WorkingPrecision) -> Backend:
    """Return the backend implementing ``precision``."""
    if precision.is_extended:
        return extended_backend(precision.significant_decimal_digits)
    return hardware_backend()
