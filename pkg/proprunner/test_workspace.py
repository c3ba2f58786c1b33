import os

import pytest

from propcalc.common import ValidationError
from propcalc.graphs import betti
from .workspace import Workspace

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'fixtures')


@pytest.fixture
def workspace():
    return Workspace(FIXTURES)


def test_every_fixture_loads(workspace):
    loaded = workspace.load_all()
    assert set(loaded) == set(['graphs', 'ssets', 'maps', 'properads', 'morphisms'])
    assert 'genus_one' in loaded['graphs']
    assert 'free_interval' in loaded['properads']


def test_graph_fixtures(workspace):
    assert betti(workspace.graph('genus_one')) == (0, 1)
    assert betti(workspace.graph('two_corollas')) == (1, 0)
    assert str(workspace.graph('corolla_2_1').biprofile()) == 'c,c;c'


def test_maps_share_spaces(workspace):
    f = workspace.sset_map('interval_to_point')
    g = workspace.sset_map('boundary_1_in_interval')
    assert g.target is f.source
    assert f.compose(g).validate() == []


def test_props_and_morphisms(workspace):
    P = workspace.prop('endomorphism_2_properad')
    assert P is workspace.prop('endomorphism_2_properad')
    f = workspace.morphism('chaotic_a_in_ab')
    assert f.check()['violations'] == []
    assert workspace.prop('free_interval').composer.kind == 'free'


def test_fixture_by_path(workspace):
    path = os.path.join(FIXTURES, 'graphs', 'edge.json')
    assert workspace.graph(path) == workspace.graph('edge')


def test_unknown_fixture(workspace):
    with pytest.raises(ValidationError):
        workspace.graph('no_such_graph')
    assert workspace.names('nothing') == []


def test_invalid_fixture(tmpdir):
    tmpdir.join('graphs').join('broken.json').write('{"vertices": [', ensure=True)
    with pytest.raises(ValidationError) as excinfo:
        Workspace(tmpdir.strpath).load_all()
    assert 'graphs/broken' in str(excinfo.value)
