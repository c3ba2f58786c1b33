import argparse

import pytest

from propcalc.common import Bounds, ValidationError
from .config import apply_config, bounds_from_args, load_config


def parser():
    p = argparse.ArgumentParser()
    p.add_argument('--bound-vertices', default=3, type=int)
    p.add_argument('--bound-arity', default=4, type=int)
    p.add_argument('--bound-dim', default=3, type=int)
    p.add_argument('--bound-horn', default=None, type=int)
    p.add_argument('--budget', default=200000, type=int)
    return p


def test_load_config(tmpdir):
    path = tmpdir.join('config.json')
    path.write('{"bound-horn": 2, "budget": 10}')
    assert load_config(path.strpath) == {'bound_horn': 2, 'budget': 10}


@pytest.mark.parametrize('text', ['[1, 2]', 'not json'])
def test_load_config_rejects(tmpdir, text):
    path = tmpdir.join('config.json')
    path.write(text)
    with pytest.raises(ValidationError):
        load_config(path.strpath)


def test_load_config_missing(tmpdir):
    with pytest.raises(ValidationError):
        load_config(tmpdir.join('missing.json').strpath)


def test_command_line_wins():
    p = parser()
    args = p.parse_args(['--budget', '5'])
    apply_config(args, p, {'budget': 10, 'bound_horn': 2})
    assert args.budget == 5
    assert args.bound_horn == 2
    assert bounds_from_args(args) == Bounds(vertices=3, arity=4, dim=3, horn=2, budget=5)


def test_unknown_config_key():
    p = parser()
    with pytest.raises(ValidationError):
        apply_config(p.parse_args([]), p, {'colour': 'c'})
