import json
import os

import pytest

from proprunner import run_props
from .commands import EXIT_BOUND, EXIT_OK, EXIT_VALIDATION, EXIT_VIOLATION

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'fixtures')


def run(capsys, *argv):
    code = run_props(['--fixtures', FIXTURES] + list(argv))
    captured = capsys.readouterr()
    out = json.loads(captured.out) if captured.out.strip() else None
    return code, out


@pytest.mark.parametrize('i,f,expected,code', [
    ('horn_1_2_in_simplex_2', 'interval_to_point', 'yes', EXIT_OK),
    ('horn_1_2_in_simplex_2', 'boundary_2_to_point', 'no', EXIT_VIOLATION),
    ('boundary_1_in_interval', 'boundary_1_to_point', 'no', EXIT_VIOLATION),
])
def test_lift(capsys, i, f, expected, code):
    exit_code, out = run(capsys, 'lift', i, f)
    assert exit_code == code
    assert out['lifting']['verdict'] == expected


def test_lift_budget(capsys):
    code, out = run(capsys, '--budget', '1', 'lift', 'horn_1_2_in_simplex_2', 'boundary_2_to_point')
    assert code == EXIT_BOUND
    assert out['lifting']['verdict'] == 'bound'


def test_canonicalize(capsys):
    code, out = run(capsys, 'canonicalize', 'genus_one')
    assert code == EXIT_OK
    assert out['biprofile'] == 'c;c'
    assert sorted(out['vertex_order']) == [0, 1]
    _, again = run(capsys, 'canonicalize', os.path.join(FIXTURES, 'graphs', 'genus_one.json'))
    assert again['code'] == out['code']


def test_enumerate(capsys):
    code, out = run(capsys, '--bound-vertices', '1', 'enumerate', '--scheme', 'dioperad', '--biprofile', 'c;c')
    assert code == EXIT_OK
    assert len(out['classes']['c;c']) == 2
    assert out['scheme'] == 'dioperad'


def test_free(capsys):
    code, out = run(capsys, 'free', 'terminal_dioperad', '--pair', 'di-c', '--N', '2')
    assert code == EXIT_OK
    assert out['pair'] == 'di-c'
    assert [c['beta'] for c in out['classes']] == [0]


@pytest.mark.parametrize('morphism,flags,code', [
    ('zero_interval_to_point', 'W1,W2', EXIT_OK),
    ('zero_boundary_1_to_point', 'W1', EXIT_VIOLATION),
    ('identity_terminal', 'W1,W2,F1,F2', EXIT_OK),
])
def test_classify(capsys, morphism, flags, code):
    exit_code, out = run(capsys, '--bound-horn', '2', 'classify', morphism, '--flags', flags)
    assert exit_code == code
    assert set(out['classification']) == set(['W1', 'W2', 'F1', 'F2'])


def test_classify_rlp(capsys):
    code, out = run(capsys, 'classify', 'chaotic_a_in_ab', '--flags', 'W2', '--rlp', 'C2')
    assert code == EXIT_VIOLATION
    assert out['classification']['W2']['verdict'] == 'yes'
    assert out['rlp']['C2']['verdict'] == 'no'


def test_selftest(capsys):
    code, out = run(capsys, '--bound-vertices', '2', 'selftest', '--check', 'corpus_summary', '--check', 'retracts')
    assert code == EXIT_OK
    assert out['failed'] == {}
    assert set(out['checks']) == set(['corpus_summary', 'retracts'])
    assert out['bounds']['vertices'] == 2


def test_missing_fixture(capsys):
    code, out = run(capsys, 'canonicalize', 'no_such_graph')
    assert code == EXIT_VALIDATION
    assert out is None


def test_no_command(capsys):
    assert run_props([]) == EXIT_VALIDATION


def test_config_file(capsys, tmpdir):
    config = tmpdir.join('config.json')
    config.write('{"budget": 1}')
    code, _ = run(capsys, '--config', config.strpath, 'lift', 'horn_1_2_in_simplex_2', 'boundary_2_to_point')
    assert code == EXIT_BOUND
