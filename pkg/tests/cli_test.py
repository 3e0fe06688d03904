# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
import csv
import io
import json
import math

import pytest

import zetafast as zf
from zetafast import cli


def run_cli(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), stdout=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run_cli(*argv, '--json')
    return code, json.loads(text)


def test_zeta_json():
    code, payload = run_json('zeta', '--sigma', '2', '--tau', '0', '--delta', '1e-10')
    assert code == cli.EXIT_OK
    assert payload['value']['re'] == pytest.approx(math.pi**2 / 6, abs=1e-10)
    assert payload['certified'] is True
    assert payload['error_bound'] == 1e-10
    assert payload['params']['v'] >= 5


def test_json_values_reproduce_library_results_exactly():
    argv = ('zeta', '--sigma', '0.5', '--tau', '1000', '--delta', '1e-10')
    _, first = run_json(*argv)
    _, second = run_json(*argv)
    assert first == second
    result = zf.zeta(0.5 + 1000j, 1e-10)
    assert complex(first['value']['re'], first['value']['im']) == result.value
    assert first['max_cancellation_ratio'] == result.max_cancellation_ratio


def test_json_floats_have_17_significant_digits():
    _, text = run_cli(
        'zeta', '--sigma', '0.5', '--tau', '10', '--delta', '1e-6', '--json'
    )
    re_value = json.loads(text)['value']['re']
    assert f'"re": {re_value:.17g}' in text


def test_zeta_text_output():
    code, text = run_cli('zeta', '--sigma', '0.5', '--tau', '10', '--delta', '1e-6')
    assert code == cli.EXIT_OK
    lines = dict(line.split(' = ', 1) for line in text.splitlines())
    assert lines['certified'] == 'true'
    assert float(lines['error_bound']) == 1e-6
    assert 'params.v' in lines


def test_zeta_with_oracle_engine():
    code, payload = run_json(
        'zeta', '--sigma', '0.5', '--tau', '14', '--delta', '1e-6', '--engine', 'oracle'
    )
    assert code == cli.EXIT_OK
    assert payload['certified'] is False


def test_heuristic_mode():
    code, payload = run_json(
        'zeta', '--sigma', '3', '--tau', '1', '--delta', '1e-6', '--mode', 'heuristic'
    )
    assert code == cli.EXIT_OK
    assert payload['certified'] is False


def test_zeta_derivative():
    code, payload = run_json(
        'zeta-deriv', '--order', '1', '--sigma', '0', '--tau', '0', '--delta', '1e-8'
    )
    assert code == cli.EXIT_OK
    assert payload['value']['re'] == pytest.approx(-0.5 * math.log(2 * math.pi), abs=1e-8)


def test_zeta_derivative_rejects_oracle_engine(capsys):
    code, _ = run_cli(
        'zeta-deriv', '--order', '1', '--sigma', '0.5', '--tau', '3', '--delta', '1e-6',
        '--engine', 'oracle',
    )
    assert code == cli.EXIT_USAGE
    assert 'derivatives' in capsys.readouterr().err


def test_lfun():
    code, payload = run_json(
        'lfun', '--q', '4', '--char-index', '1', '--sigma', '2', '--tau', '0',
        '--delta', '1e-8',
    )
    assert code == cli.EXIT_OK
    assert payload['value']['re'] == pytest.approx(0.915965594177219, abs=1e-8)
    assert payload['character'] == {'q': 4, 'index': 1, 'conductor': 4, 'parity': -1}


def test_lfun_principal_character_is_a_domain_error(capsys):
    code, _ = run_cli(
        'lfun', '--q', '5', '--char-index', '0', '--sigma', '0.5', '--tau', '1',
        '--delta', '1e-6',
    )
    assert code == cli.EXIT_DOMAIN
    assert 'principal' in capsys.readouterr().err


def test_lfun_with_oracle_engine_accepts_principal_character():
    code, payload = run_json(
        'lfun', '--q', '3', '--char-index', '0', '--sigma', '2', '--tau', '0',
        '--delta', '1e-6', '--engine', 'oracle',
    )
    assert code == cli.EXIT_OK
    assert payload['value']['re'] == pytest.approx(
        (1 - 3**-2) * math.pi**2 / 6, rel=1e-12
    )


def test_params():
    code, payload = run_json('params', '--sigma', '1', '--tau', '10', '--delta', '0.05')
    assert code == cli.EXIT_OK
    assert payload['v'] == 6
    assert payload['M'] == 2
    assert payload['speed_precondition'] is False
    assert 'summand_bound' not in payload


def test_params_with_summand_bound():
    code, payload = run_json(
        'params', '--sigma', '0.5', '--tau', '1000', '--delta', '0.05'
    )
    assert code == cli.EXIT_OK
    assert payload['speed_precondition'] is True
    assert payload['summands'] <= payload['summand_bound']


def test_domain_error_exit_code(capsys):
    code, text = run_cli('zeta', '--sigma', '3', '--tau', '1', '--delta', '1e-6')
    assert code == cli.EXIT_DOMAIN
    assert text == ''
    assert 'zetafast: error:' in capsys.readouterr().err


def test_pole_exit_code():
    code, _ = run_cli('zeta', '--sigma', '1', '--tau', '0', '--delta', '1e-6')
    assert code == cli.EXIT_DOMAIN


def test_precision_exhausted_exit_code(monkeypatch):
    monkeypatch.setattr(
        cli,
        '_options',
        lambda args: cli.Options(
            precision='extended', extended_digits=20, max_extended_digits=20
        ),
    )
    code, _ = run_cli('zeta', '--sigma', '0.5', '--tau', '100', '--delta', '1e-18')
    assert code == cli.EXIT_PRECISION


def test_non_convergence_exit_code(monkeypatch):
    monkeypatch.setattr(
        cli, '_options', lambda args: cli.Options(max_tail_terms=2)
    )
    code, _ = run_cli('zeta', '--sigma', '0.5', '--tau', '1e5', '--delta', '1e-6')
    assert code == cli.EXIT_NONCONVERGENCE


@pytest.mark.parametrize(
    'argv',
    [
        [],
        ['zeta'],
        ['zeta', '--sigma', 'x', '--tau', '1', '--delta', '1e-3'],
        ['unknown'],
        ['zeta-deriv', '--order', '3', '--sigma', '0.5', '--tau', '1', '--delta', '1e-3'],
        ['bench', '--tau-list', '1,a', '--delta-list', '1e-3', '--csv', 'x.csv'],
    ],
)
def test_usage_errors(argv, capsys):
    assert cli.run(argv, stdout=io.StringIO()) == cli.EXIT_USAGE
    capsys.readouterr()


def test_help_exits_cleanly(capsys):
    assert cli.run(['--help'], stdout=io.StringIO()) == cli.EXIT_OK
    assert 'zeta-deriv' in capsys.readouterr().out


def test_precision_option():
    code, payload = run_json(
        '--precision', 'extended', 'zeta', '--sigma', '0.5', '--tau', '10',
        '--delta', '1e-6',
    )
    assert code == cli.EXIT_OK
    assert payload['precision'] == 'extended'


def test_scan():
    code, payload = run_json('scan', '--t0', '14', '--t1', '26')
    assert code == cli.EXIT_OK
    assert payload['count'] == 3
    assert payload['zeros'][0]['t'] == pytest.approx(14.134725141734693, abs=1e-7)
    assert payload['zeros'][0]['t_lo'] <= payload['zeros'][0]['t']


def test_scan_invalid_step():
    code, _ = run_cli('scan', '--t0', '14', '--t1', '26', '--step', '1')
    assert code == cli.EXIT_DOMAIN


def test_bench(tmp_path):
    path = tmp_path / 'bench.csv'
    code, payload = run_json(
        'bench', '--tau-list', '100,1000', '--delta-list', '1e-3,1e-6',
        '--csv', str(path), '--oracle-max-tau', '0',
    )
    assert code == cli.EXIT_OK
    assert payload['rows'] == 4
    assert payload['within_bound'] is True
    assert payload['max_abs_error_vs_oracle'] is None
    with open(path, newline='') as f:
        rows = list(csv.reader(f))
    assert len(rows) == 5
    assert rows[0][:3] == ['sigma', 'tau', 'delta']


def test_selftest():
    code, payload = run_json('selftest')
    assert code == cli.EXIT_OK
    assert payload['passed'] is True
    assert len(payload['checks']) == 8


def test_selftest_failure_exit_code(monkeypatch):
    monkeypatch.setattr(
        cli,
        'run_selftest',
        lambda options: [zf.CheckOutcome('broken', False, 'detail')],
    )
    code, payload = run_json('selftest')
    assert code == cli.EXIT_SELFTEST_FAILED
    assert payload['passed'] is False


def test_verbose_logging(capsys):
    code, _ = run_cli(
        '-vv', 'zeta', '--sigma', '0.5', '--tau', '10', '--delta', '1e-6'
    )
    assert code == cli.EXIT_OK
    assert 'DEBUG' in capsys.readouterr().err
