# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Scalar special functions and the incomplete gamma cutoff.

All scalar functions take and return Python ``complex`` (or ``float``) values
and never let NaN or infinity escape without raising.
"""

from __future__ import annotations

import cmath
import math
from numbers import Integral
from typing import Any

import numpy as np
import numpy.typing as npt
from scipy import special

from .errors import DomainError, PoleError
from .precision import Backend, hardware_backend

# Largest order for which the cutoff is accumulated directly.
_DIRECT_Q_MAX_ORDER = 150
# exp(-x) of larger arguments underflows to denormals in double precision.
_DIRECT_Q_MAX_X = 700.0


def as_complex(z: Any, name: str = 'argument') -> complex:
    """Convert to ``complex`` and reject NaN and infinities."""
    try:
        value = complex(z)
    except (TypeError, ValueError) as err:
        raise DomainError(f'Cannot interpret {name} {z!r} as a complex number.') from err
    if not cmath.isfinite(value):
        raise DomainError(f'The {name} must be finite, got {value}.')
    return value


def _finite(value: complex, what: str) -> complex:
    if not cmath.isfinite(value):
        raise DomainError(f'{what} is not representable, got {value}.')
    return value


def _check_gamma_pole(z: complex) -> None:
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f'The gamma function has a pole at {z.real:g}.')


def principal_log(z: complex) -> complex:
    """Principal logarithm with argument in (-π, π].

    Parameters
    ----------
    z:
        Nonzero complex number.

    Returns
    -------
    :
        ``log|z| + i arg(z)``.

    Raises
    ------
    zetafast.DomainError
        If ``z`` is zero or not finite.
    """
    z = as_complex(z)
    if z == 0:
        raise DomainError('The logarithm of zero is undefined.')
    # Adding 0j turns a negative zero imaginary part into +0 so that arg(-1) = π.
    return complex(np.log(z + 0j))


def complex_pow(z: complex, w: complex) -> complex:
    """Principal power ``exp(w * principal_log(z))``.

    ``0**w`` is only defined for positive integer ``w``.
    """
    z = as_complex(z)
    w = as_complex(w, 'exponent')
    if z == 0:
        if w.imag == 0.0 and w.real > 0 and w.real == math.floor(w.real):
            return 0j
        raise DomainError(f'0 raised to the power {w} is undefined.')
    return _finite(complex(np.exp(w * principal_log(z))), f'{z}**{w}')


def log_gamma(z: complex) -> complex:
    """Logarithm of the gamma function.

    Uses the principal branch of scipy's ``loggamma``, which is continuous
    everywhere off the nonpositive real axis.

    Raises
    ------
    zetafast.PoleError
        At nonpositive integers.
    """
    z = as_complex(z)
    _check_gamma_pole(z)
    return _finite(complex(special.loggamma(z)), f'log_gamma({z})')


def digamma(z: complex) -> complex:
    """Logarithmic derivative of the gamma function."""
    z = as_complex(z)
    _check_gamma_pole(z)
    return _finite(complex(special.psi(z)), f'digamma({z})')


def trigamma(z: complex) -> complex:
    """Derivative of :func:`digamma`."""
    z = as_complex(z)
    _check_gamma_pole(z)
    return _finite(
        complex(hardware_backend().trigamma(np.array([z]))[0]), f'trigamma({z})'
    )


def q_cutoff(v: int, x: float) -> float:
    """Normalized upper incomplete gamma function for integer order.

    .. math::

        Q(v, x) = e^{-x} \\sum_{w=0}^{v-1} \\frac{x^w}{w!}

    Parameters
    ----------
    v:
        Positive integer order.
    x:
        Nonnegative real argument.

    Returns
    -------
    :
        A value in (0, 1]. For very large ``x`` the result can underflow to 0.

    See Also
    --------
    zetafast.core.numerics.q_cutoff_array:
        Vectorized version used by the series engine.
    """
    _check_order(v)
    x = float(x)
    if not x >= 0.0 or not math.isfinite(x):
        raise DomainError(f'The cutoff argument must be finite and >= 0, got {x}.')
    return float(q_cutoff_array(int(v), np.array([x]), hardware_backend())[0])


def q_cutoff_array(v: int, x: npt.ArrayLike, backend: Backend) -> npt.NDArray[Any]:
    """Vectorized :func:`q_cutoff` in the given backend.

    ``x`` must already be a backend array (see :meth:`Backend.reals`) when
    ``backend`` is extended.
    Terms are accumulated by the recurrence ``t[w+1] = t[w] * x / (w + 1)``.
    In hardware precision, orders above 150 and arguments above 700 switch to
    log-space accumulation.
    """
    _check_order(v)
    if backend.precision.is_extended:
        return _q_direct(v, np.asarray(x, dtype=object), backend)
    x = np.asarray(x, dtype=np.float64)
    if v <= _DIRECT_Q_MAX_ORDER and (x.size == 0 or x.max() <= _DIRECT_Q_MAX_X):
        return _q_direct(v, x, backend)
    return _q_log_space(v, x)


def _check_order(v: int) -> None:
    if not isinstance(v, Integral) or isinstance(v, bool) or v < 1:
        raise DomainError(f'The cutoff order must be a positive integer, got {v!r}.')


def _q_direct(v: int, x: npt.NDArray[Any], backend: Backend) -> npt.NDArray[Any]:
    term = x * 0 + 1
    total = term
    for w in range(1, v):
        term = term * x / w
        total = total + term
    return total * backend.exp(-x)


def _q_log_space(v: int, x: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    out = np.ones_like(x)
    positive = x > 0
    if not positive.any():
        return out
    w = np.arange(v, dtype=np.float64)
    log_terms = w * np.log(x[positive])[:, np.newaxis] - special.gammaln(w + 1)
    out[positive] = np.exp(special.logsumexp(log_terms, axis=1) - x[positive])
    return out
