# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Dirichlet characters, Gauss sums and Dirichlet L-functions.

Characters modulo ``q`` are built from a generating set of the unit group
``(Z/qZ)*``, one cyclic factor per odd prime power and up to two for the
power of 2. A character is identified by its exponent tuple ``(a_1, ..., a_r)``
with ``chi(g_j) = exp(2 pi i a_j / ord(g_j))``. Characters are enumerated in
lexicographic order of the exponents, index 0 is the principal character.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import math
from collections.abc import Callable
from typing import Any

import numpy as np
import numpy.typing as npt
from sympy import factorint, primitive_root

from .config import Options, resolve_options
from .core.errors import CharacterError, UnsupportedModulusError
from .core.numerics import as_complex
from .core.precision import Backend
from .core.series import correction_series, dirichlet_series, tail_tolerance
from .engine import EvalResult, SeriesEvaluation, evaluate_with_fallback
from .logging import get_logger
from .params import Mode, check_delta, derive_l_params

MAX_MODULUS = 10_000

_EXACT_QUARTER_TURNS = (1 + 0j, 1j, -1 + 0j, -1j)


@dataclasses.dataclass(frozen=True, slots=True)
class _CyclicFactor:
    generator: int
    """Generator as a residue modulo the full modulus."""
    order: int
    prime: int


def _crt_lift(residue: int, prime_power: int, modulus: int) -> int:
    """The unit congruent to ``residue`` mod ``prime_power`` and to 1 elsewhere."""
    cofactor = modulus // prime_power
    k = (residue - 1) * pow(cofactor, -1, prime_power) % prime_power
    return (1 + cofactor * k) % modulus


def _cyclic_factors(q: int) -> list[_CyclicFactor]:
    factors = []
    for p, e in sorted(factorint(q).items()):
        pe = p**e
        if p == 2:
            if e >= 2:
                factors.append(_CyclicFactor(_crt_lift(pe - 1, pe, q), 2, 2))
            if e >= 3:
                factors.append(_CyclicFactor(_crt_lift(5, pe, q), 2 ** (e - 2), 2))
        else:
            order = pe // p * (p - 1)
            factors.append(
                _CyclicFactor(_crt_lift(int(primitive_root(pe)), pe, q), order, p)
            )
    return factors


class DirichletGroup:
    """Structure of the unit group ``(Z/qZ)*``.

    Parameters
    ----------
    q:
        Modulus.

    Attributes
    ----------
    generators:
        Generators of the cyclic factors as residues mod ``q``.
    orders:
        Orders of the generators.
    exponent:
        Least common multiple of the orders.
    logs:
        Integer array of shape ``(q, len(generators))`` holding the discrete
        logarithm of every residue, ``-1`` for residues that are no units.
    """

    def __init__(self, q: int) -> None:
        self.modulus = q
        factors = _cyclic_factors(q)
        self.generators = tuple(f.generator for f in factors)
        self.orders = tuple(f.order for f in factors)
        self.exponent = math.lcm(*self.orders) if self.orders else 1
        logs = np.full((q, len(factors)), -1, dtype=np.int64)
        for exponents in itertools.product(*(range(o) for o in self.orders)):
            n = 1
            for g, a in zip(self.generators, exponents, strict=True):
                n = n * pow(g, a, q) % q
            logs[n % q] = exponents
        self.logs = logs
        self.is_unit = np.array([math.gcd(n, q) == 1 for n in range(q)])

    @property
    def size(self) -> int:
        """Number of units, Euler's totient of the modulus."""
        return math.prod(self.orders)

    def exponents(self, index: int) -> tuple[int, ...]:
        """Exponent tuple of character number ``index``."""
        if not 0 <= index < self.size:
            raise CharacterError(
                f'Character index {index} out of range for modulus {self.modulus} '
                f'with {self.size} characters.'
            )
        out = []
        for order in reversed(self.orders):
            index, a = divmod(index, order)
            out.append(a)
        return tuple(reversed(out))

    def index(self, exponents: tuple[int, ...]) -> int:
        index = 0
        for order, a in zip(self.orders, exponents, strict=True):
            index = index * order + a
        return index

    def __repr__(self) -> str:
        return f'DirichletGroup({self.modulus})'


@functools.lru_cache(maxsize=64)
def dirichlet_group(q: int) -> DirichletGroup:
    """Return the cached unit group structure of modulus ``q``."""
    return DirichletGroup(q)


@dataclasses.dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character.

    Values are computed lazily. Nonzero values whose phase is a multiple of
    a quarter turn are exact.
    """

    group: DirichletGroup
    exponents: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.group.modulus

    @property
    def index(self) -> int:
        return self.group.index(self.exponents)

    @functools.cached_property
    def phases(self) -> npt.NDArray[np.int64]:
        """``k`` with ``chi(n) = exp(2 pi i k / exponent)``, ``-1`` for non-units."""
        group = self.group
        weights = np.array(
            [
                a * (group.exponent // o)
                for a, o in zip(self.exponents, group.orders, strict=True)
            ],
            dtype=np.int64,
        )
        phases = (group.logs @ weights) % group.exponent
        phases[~group.is_unit] = -1
        return phases

    @functools.cached_property
    def values(self) -> npt.NDArray[np.complex128]:
        """Character values indexed by the residue ``n mod q``."""
        return self._table(
            lambda k: np.exp(2j * np.pi * k / self.group.exponent), np.complex128
        )

    def table(self, backend: Backend) -> npt.NDArray[Any]:
        """Character values in the precision of ``backend``."""
        if not backend.precision.is_extended:
            return self.values
        turn = backend.scalar(2j) * backend.pi / self.group.exponent
        return self._table(lambda k: backend.exp(turn * int(k)), object)

    def _table(self, root: Callable[[Any], Any], dtype: Any) -> npt.NDArray[Any]:
        exponent = self.group.exponent
        out = np.zeros(self.modulus, dtype=dtype)
        for n, k in enumerate(self.phases.tolist()):
            if k < 0:
                continue
            if (4 * k) % exponent == 0:
                out[n] = _EXACT_QUARTER_TURNS[4 * k // exponent]
            else:
                out[n] = root(k)
        return out

    def __call__(self, n: int) -> complex:
        return complex(self.values[n % self.modulus])

    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)

    @functools.cached_property
    def order(self) -> int:
        """Multiplicative order of the character."""
        return math.lcm(
            *(
                o // math.gcd(a, o)
                for a, o in zip(self.exponents, self.group.orders, strict=True)
            ),
            1,
        )

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    @property
    def parity(self) -> int:
        """``chi(-1)``, either +1 (even) or -1 (odd)."""
        return 1 if self(-1).real > 0 else -1

    @functools.cached_property
    def conductor(self) -> int:
        """Smallest modulus ``d | q`` the character factors through."""
        q = self.modulus
        residues = np.arange(q)
        trivial_on = self.phases == 0
        units = self.group.is_unit
        for d in range(1, q + 1):
            if q % d:
                continue
            kernel = units & (residues % d == 1 % d)
            if trivial_on[kernel].all():
                return d
        return q

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def conjugate(self) -> DirichletCharacter:
        return DirichletCharacter(
            self.group,
            tuple(
                -a % o for a, o in zip(self.exponents, self.group.orders, strict=True)
            ),
        )

    def __repr__(self) -> str:
        return f'DirichletCharacter(q={self.modulus}, index={self.index})'


def _check_modulus(q: int) -> int:
    if isinstance(q, bool) or not isinstance(q, int | np.integer):
        raise UnsupportedModulusError(f'The modulus must be an integer, got {q!r}.')
    if not 2 <= q <= MAX_MODULUS:
        raise UnsupportedModulusError(
            f'Moduli between 2 and {MAX_MODULUS} are supported, got {q}.'
        )
    return int(q)


def characters_mod(q: int) -> list[DirichletCharacter]:
    """All ``phi(q)`` characters modulo ``q`` in enumeration order.

    Examples
    --------

      >>> import zetafast as zf
      >>> [chi(3) for chi in zf.characters_mod(4)]
      [(1+0j), (-1+0j)]
    """
    group = dirichlet_group(_check_modulus(q))
    return [
        DirichletCharacter(group, group.exponents(i)) for i in range(group.size)
    ]


def character(q: int, index: int) -> DirichletCharacter:
    """Character number ``index`` modulo ``q``."""
    group = dirichlet_group(_check_modulus(q))
    return DirichletCharacter(group, group.exponents(index))


@dataclasses.dataclass(frozen=True, slots=True)
class GaussSumValue:
    """Value of a Gauss sum."""

    value: complex

    def __complex__(self) -> complex:
        return self.value

    def __abs__(self) -> float:
        return abs(self.value)


def gauss_sum(chi: DirichletCharacter) -> GaussSumValue:
    """``G(chi) = sum_{p=1}^{q} chi(p) exp(2 pi i p / q)``."""
    return GaussSumValue(_gauss_sum(chi, None))


def _gauss_sum(chi: DirichletCharacter, backend: Backend | None) -> Any:
    q = chi.modulus
    p = np.arange(1, q + 1)
    if backend is None or not backend.precision.is_extended:
        terms = chi.values[p % q] * np.exp(2j * np.pi * p / q)
        return complex(math.fsum(terms.real), math.fsum(terms.imag))
    turn = backend.scalar(2j) * backend.pi / q
    terms = chi.table(backend)[p % q] * backend.exp(backend.reals(p) * turn)
    return backend.fsum(terms)


def _check_l_character(chi: DirichletCharacter) -> None:
    if chi.is_principal:
        raise CharacterError(
            f'{chi} is principal; L-functions of principal characters are not '
            'supported.'
        )
    if not chi.is_primitive:
        raise CharacterError(
            f'{chi} is imprimitive with conductor {chi.conductor}; '
            'only primitive characters are supported.'
        )


def _l_series(
    s: complex,
    chi: DirichletCharacter,
    params: Any,
    backend: Backend,
    options: Options,
    *,
    d_range: tuple[int, int],
    m_range: tuple[int, int],
) -> SeriesEvaluation:
    q = chi.modulus
    s_b = backend.scalar(s)
    table = chi.table(backend)
    components = {
        'D': dirichlet_series(
            s_b,
            params.v,
            params.N,
            d_range[1],
            backend,
            start=d_range[0],
            weights=lambda n: table[n % q],
        )
    }
    gauss = _gauss_sum(chi, backend)
    log_q = backend.log(backend.real(q))
    ms = range(m_range[0], m_range[1] + 1)
    conjugates = np.conjugate(table[np.array(ms, dtype=np.int64) % q])
    tail_terms = 0
    for mu in (1, -1):
        # chi(-mu) G(chi) folded into the weights
        factor = gauss * table[-mu % q]
        acc, count = correction_series(
            s_b,
            params.v,
            params.N,
            mu,
            ms,
            backend,
            tolerance=tail_tolerance(params.delta, params.M),
            max_terms=options.max_tail_terms,
            shift=q,
            weights=conjugates * factor,
            log_factor=-s_b * log_q,
            dlog_factor=-log_q,
        )
        components[f'E{mu:+d}'] = acc
        tail_terms += count
    return SeriesEvaluation(
        backend, components, dict.fromkeys(components, 1), tail_terms
    )


def l_function(
    s: complex,
    chi: DirichletCharacter,
    delta: float,
    *,
    options: Options | None = None,
) -> EvalResult:
    """Dirichlet L-function of a primitive non-principal character.

    Both correction series are evaluated with parameters from
    :func:`zetafast.derive_l_params`.
    No truncation bound is proven for L-functions, so the result is never
    certified. ``error_bound`` is an estimate from doubling the main sum
    cutoff and the number of correction summands, plus the magnitudes of the
    last included terms and the roundoff estimate.

    Raises
    ------
    zetafast.CharacterError
        If ``chi`` is principal or imprimitive.
    """
    s = as_complex(s, 's')
    delta = check_delta(delta, Mode.heuristic)
    _check_l_character(chi)
    options = resolve_options(options)
    if s.imag < 0:
        return l_function(
            s.conjugate(), chi.conjugate(), delta, options=options
        ).conjugate()
    params = derive_l_params(s.real, s.imag, delta, chi.modulus)
    logger = get_logger()
    logger.debug('L(%s, %s): %s', s, chi, params)

    base_ranges = {'d_range': (1, params.d_cutoff), 'm_range': (1, params.M)}
    evaluation, _ = evaluate_with_fallback(
        lambda backend: _l_series(s, chi, params, backend, options, **base_ranges),
        delta,
        options,
        f'L({s}, {chi})',
    )
    backend = evaluation.backend
    extension = _l_series(
        s,
        chi,
        params,
        backend,
        options,
        d_range=(params.d_cutoff + 1, 2 * params.d_cutoff),
        m_range=(params.M + 1, 2 * params.M),
    )
    components = evaluation.components
    last_terms = (
        components['D'].last_term
        + components['E+1'].last_block
        + components['E-1'].last_block
    )
    refinement = abs(backend.to_complex(extension.total))
    roundoff = evaluation.roundoff_estimate + extension.roundoff_estimate
    estimate = refinement + last_terms + roundoff
    logger.debug('  refinement %.3g, last terms %.3g', refinement, last_terms)
    return EvalResult(
        value=backend.to_complex(evaluation.total),
        error_bound=estimate,
        summands_used=params.summand_count(correction_series=2),
        certified=False,
        max_cancellation_ratio=evaluation.max_cancellation_ratio,
        params=params,
        precision=backend.name,
        roundoff_estimate=roundoff,
        tail_terms=evaluation.tail_terms,
    )

