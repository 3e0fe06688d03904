# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Exception types raised by zetafast.

All exceptions derive from :class:`ZetafastError`.
Errors caused by invalid arguments additionally derive from :class:`ValueError`,
errors caused by the arithmetic itself from :class:`ArithmeticError`.
"""


class ZetafastError(Exception):
    """Base class of all errors raised by zetafast."""


class DomainError(ZetafastError, ValueError):
    """An argument lies outside the domain of an operation."""


class PoleError(DomainError):
    """The function has a pole at the requested argument."""


class InvalidAccuracyError(DomainError):
    """The requested accuracy is not positive or too large to be certified."""


class PreconditionError(DomainError):
    """A precondition of a bound does not hold, so the bound does not apply."""


class CharacterError(DomainError):
    """A Dirichlet character does not meet the requirements of an operation."""


class UnsupportedModulusError(DomainError):
    """The modulus of a Dirichlet character is outside the supported range."""


class PrecisionExhaustedError(ZetafastError, ArithmeticError):
    """Roundoff cannot be kept below the requested accuracy."""


class NonConvergenceError(ZetafastError, ArithmeticError):
    """A series did not meet its stopping rule or failed self-validation."""


for _cls in (
    ZetafastError,
    DomainError,
    PoleError,
    InvalidAccuracyError,
    PreconditionError,
    CharacterError,
    UnsupportedModulusError,
    PrecisionExhaustedError,
    NonConvergenceError,
):
    _cls.__module__ = 'zetafast'
del _cls
