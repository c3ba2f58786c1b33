import json

from propcalc.common import Verdict
from propcalc.graphs import Biprofile, canonical_form, make_edge
from .common import json_default, sort_keys


def test_json_default():
    assert json.loads(json.dumps(Verdict.yes('fine'), default=json_default)) == {'verdict': 'yes', 'reason': 'fine'}
    assert json.dumps(set(['b', 'a']), default=json_default) == '["a", "b"]'
    code = canonical_form(make_edge('c'))
    assert json.dumps(code, default=json_default) == json.dumps(str(code))


def test_sort_keys():
    out = sort_keys({'b': 1, '10': 2, '2': {'y': 1, 'x': [Biprofile(('c',), ())]}, None: 0})
    assert list(out) == [None, '2', '10', 'b']
    assert list(out['2']) == ['x', 'y']
    assert out['2']['x'] == ['c;']
