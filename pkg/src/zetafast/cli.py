# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Command line interface.

Exit codes: 0 on success, 1 if a self-test check fails, 2 for usage errors,
3 for domain errors, 4 if the precision is exhausted and 5 if a series does
not converge.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from typing import Any, TextIO

from .bench import DEFAULT_ORACLE_MAX_TAU, run_bench, write_bench_csv
from .config import Engine, Options, Precision, get_options
from .core.errors import DomainError, NonConvergenceError, PrecisionExhaustedError
from .dirichlet import character, l_function
from .engine import zeta, zeta_derivative
from .logging import configure_logging, get_logger, verbosity_to_level
from .oracle import EulerMaclaurinConfig, l_function_em, oracle_result, zeta_em
from .params import Mode, derive_params, speed_precondition, summand_bound
from .scanner import DEFAULT_DELTA, find_zeros
from .selftest import run_selftest
from .utils.to_string import mapping_to_json, mapping_to_string

EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_PRECISION = 4
EXIT_NONCONVERGENCE = 5

_EXIT_CODES: tuple[tuple[type[Exception], int], ...] = (
    (DomainError, EXIT_DOMAIN),
    (PrecisionExhaustedError, EXIT_PRECISION),
    (NonConvergenceError, EXIT_NONCONVERGENCE),
)


def _float_list(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(',') if item.strip()]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f'invalid list of numbers: {text!r}') from err


def _add_point(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--sigma', type=float, required=True, help='Real part of s.')
    parser.add_argument('--tau', type=float, required=True, help='Imaginary part of s.')
    parser.add_argument(
        '--delta',
        type=float,
        required=True,
        help='Requested absolute accuracy.',
    )


def _add_mode(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--mode',
        choices=[str(m) for m in Mode],
        default=str(Mode.certified),
        help='Evaluation mode (default: %(default)s).',
    )


def _add_engine(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--engine',
        choices=[str(e) for e in Engine],
        default=str(Engine.zetafast),
        help='Evaluator (default: %(default)s).',
    )


def _add_json(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--json', action='store_true', help='Print JSON.')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='zetafast',
        description='Evaluate the Riemann zeta function and Dirichlet '
        'L-functions with error bounds.',
    )
    parser.add_argument(
        '-v',
        '--verbose',
        action='count',
        default=0,
        help='Log progress (-v) or details (-vv) to stderr.',
    )
    parser.add_argument(
        '--precision',
        choices=[str(p) for p in Precision],
        default=None,
        help='Backend selection, overrides ZETAFAST_PRECISION.',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('zeta', help='Evaluate zeta(s).')
    _add_point(p)
    _add_mode(p)
    _add_engine(p)
    _add_json(p)
    p.set_defaults(handler=_cmd_zeta)

    p = sub.add_parser('zeta-deriv', help="Evaluate zeta'(s) or zeta''(s).")
    p.add_argument('--order', type=int, choices=(1, 2), required=True)
    _add_point(p)
    _add_mode(p)
    _add_engine(p)
    _add_json(p)
    p.set_defaults(handler=_cmd_zeta_deriv)

    p = sub.add_parser('lfun', help='Evaluate a Dirichlet L-function.')
    p.add_argument('--q', type=int, required=True, help='Modulus.')
    p.add_argument('--char-index', type=int, required=True, help='Character index.')
    _add_point(p)
    _add_engine(p)
    _add_json(p)
    p.set_defaults(handler=_cmd_lfun)

    p = sub.add_parser('params', help='Show truncation parameters.')
    _add_point(p)
    _add_mode(p)
    _add_json(p)
    p.set_defaults(handler=_cmd_params)

    p = sub.add_parser('scan', help='Locate zeros on the critical line.')
    p.add_argument('--t0', type=float, required=True)
    p.add_argument('--t1', type=float, required=True)
    p.add_argument('--step', type=float, default=0.05, help='Grid step.')
    p.add_argument('--delta', type=float, default=DEFAULT_DELTA)
    p.add_argument('--workers', type=int, default=None)
    _add_engine(p)
    _add_json(p)
    p.set_defaults(handler=_cmd_scan)

    p = sub.add_parser('bench', help='Compare summand counts with their bound.')
    p.add_argument('--tau-list', type=_float_list, required=True)
    p.add_argument('--delta-list', type=_float_list, required=True)
    p.add_argument('--sigma-list', type=_float_list, default=[0.5])
    p.add_argument('--csv', required=True, metavar='PATH')
    p.add_argument('--oracle-max-tau', type=float, default=DEFAULT_ORACLE_MAX_TAU)
    p.add_argument('--workers', type=int, default=None)
    _add_json(p)
    p.set_defaults(handler=_cmd_bench)

    p = sub.add_parser('selftest', help='Run quick consistency checks.')
    _add_json(p)
    p.set_defaults(handler=_cmd_selftest)
    return parser


def _cmd_zeta(args: argparse.Namespace, options: Options) -> tuple[dict[str, Any], int]:
    s = complex(args.sigma, args.tau)
    if Engine(args.engine) is Engine.oracle:
        cfg = EulerMaclaurinConfig.for_argument(s)
        return oracle_result(zeta_em(s, cfg), cfg).to_dict(), EXIT_OK
    return zeta(s, args.delta, args.mode, options=options).to_dict(), EXIT_OK


def _cmd_zeta_deriv(
    args: argparse.Namespace, options: Options
) -> tuple[dict[str, Any], int]:
    s = complex(args.sigma, args.tau)
    result = zeta_derivative(s, args.order, args.delta, args.mode, options=options)
    return result.to_dict(), EXIT_OK


def _cmd_lfun(args: argparse.Namespace, options: Options) -> tuple[dict[str, Any], int]:
    s = complex(args.sigma, args.tau)
    chi = character(args.q, args.char_index)
    if Engine(args.engine) is Engine.oracle:
        cfg = EulerMaclaurinConfig.for_argument(s)
        payload = oracle_result(l_function_em(s, chi, cfg), cfg).to_dict()
    else:
        payload = l_function(s, chi, args.delta, options=options).to_dict()
    payload['character'] = {
        'q': chi.modulus,
        'index': chi.index,
        'conductor': chi.conductor,
        'parity': chi.parity,
    }
    return payload, EXIT_OK


def _cmd_params(args: argparse.Namespace, options: Options) -> tuple[dict[str, Any], int]:
    tau = abs(args.tau)
    params = derive_params(args.sigma, tau, args.delta, args.mode)
    payload = params.to_dict()
    payload['summands'] = params.summand_count()
    precondition = speed_precondition(tau, args.delta)
    payload['speed_precondition'] = precondition
    if precondition:
        payload['summand_bound'] = summand_bound(args.sigma, tau, args.delta)
    return payload, EXIT_OK


def _cmd_scan(args: argparse.Namespace, options: Options) -> tuple[dict[str, Any], int]:
    zeros = find_zeros(
        args.t0,
        args.t1,
        args.delta,
        args.step,
        engine=args.engine,
        workers=args.workers,
        options=options,
    )
    return {
        'count': len(zeros),
        'zeros': [
            {'t': t, 't_lo': bracket.t_lo, 't_hi': bracket.t_hi} for bracket, t in zeros
        ],
    }, EXIT_OK


def _cmd_bench(args: argparse.Namespace, options: Options) -> tuple[dict[str, Any], int]:
    records = run_bench(
        args.tau_list,
        args.delta_list,
        args.sigma_list,
        oracle_max_tau=args.oracle_max_tau,
        workers=args.workers,
        options=options,
    )
    write_bench_csv(records, args.csv)
    ratios = [r.bound_ratio for r in records if r.precondition_ok]
    errors = [
        r.abs_error_vs_oracle for r in records if r.abs_error_vs_oracle is not None
    ]
    return {
        'rows': len(records),
        'csv': str(args.csv),
        'within_bound': all(r.within_bound for r in records),
        'max_bound_ratio': max(ratios, default=None),
        'max_abs_error_vs_oracle': max(errors, default=None),
    }, EXIT_OK


def _cmd_selftest(
    args: argparse.Namespace, options: Options
) -> tuple[dict[str, Any], int]:
    outcomes = run_selftest(options)
    passed = all(outcome.passed for outcome in outcomes)
    return {
        'passed': passed,
        'checks': [outcome.to_dict() for outcome in outcomes],
    }, EXIT_OK if passed else EXIT_SELFTEST_FAILED


def _options(args: argparse.Namespace) -> Options:
    if args.precision is None:
        return get_options()
    return Options(precision=Precision(args.precision))


def _exit_code(err: Exception) -> int:
    for cls, code in _EXIT_CODES:
        if isinstance(err, cls):
            return code
    raise err


def run(argv: Sequence[str] | None = None, *, stdout: TextIO | None = None) -> int:
    """Run the command line interface and return the exit code.

    Parameters
    ----------
    argv:
        Arguments without the program name, ``sys.argv[1:]`` by default.
    stdout:
        Stream results are printed to, ``sys.stdout`` by default.
    """
    out = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == 'zeta-deriv' and Engine(args.engine) is Engine.oracle:
        parser.print_usage(sys.stderr)
        print(
            'zetafast: error: the oracle engine does not evaluate derivatives',
            file=sys.stderr,
        )
        return EXIT_USAGE
    configure_logging(verbosity_to_level(args.verbose))

    try:
        payload, code = args.handler(args, _options(args))
    except (DomainError, PrecisionExhaustedError, NonConvergenceError) as err:
        get_logger().debug('%s failed', args.command, exc_info=True)
        print(f'zetafast: error: {err}', file=sys.stderr)
        return _exit_code(err)
    if args.json:
        print(mapping_to_json(payload), file=out)
    else:
        print(mapping_to_string(payload), file=out)
    return code


def main() -> None:
    sys.exit(run())
