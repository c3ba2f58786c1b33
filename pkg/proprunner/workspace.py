"""Fixture files: graphs, simplicial sets, maps, props and morphisms as JSON.

A fixture is named by a path to a .json file or by its stem inside the
matching subdirectory of the workspace, e.g. ``properads/terminal``.
"""
import json
import os

from propcalc.common import ValidationError
from propcalc.common.decorators import memoize
from propcalc.free import free_prop_from_json
from propcalc.graphs import ColoredGraph, check
from propcalc.properads import morphism_from_json, prop_from_json
from propcalc.ssets import FinSimplicialSet, SSetMap


KINDS = ('graphs', 'ssets', 'maps', 'properads', 'morphisms')


def load_json(path):
    try:
        with open(path) as fp:
            return json.load(fp)
    except (IOError, OSError) as e:
        raise ValidationError('cannot read {0}: {1}'.format(path, e))
    except ValueError as e:
        raise ValidationError('{0} is not JSON: {1}'.format(path, e))


class Workspace(object):
    def __init__(self, directory='fixtures'):
        self.directory = directory

    def path(self, kind, name):
        if os.path.isfile(name):
            return name
        candidate = os.path.join(self.directory, kind, name if name.endswith('.json') else name + '.json')
        if not os.path.isfile(candidate):
            raise ValidationError('no {0} fixture named {1!r} in {2}'.format(kind, name, self.directory))
        return candidate

    def names(self, kind):
        folder = os.path.join(self.directory, kind)
        if not os.path.isdir(folder):
            return []
        return sorted(f[:-len('.json')] for f in os.listdir(folder) if f.endswith('.json'))

    def graph(self, name):
        return check(ColoredGraph.from_json(load_json(self.path('graphs', name))))

    @memoize
    def sset(self, name):
        return FinSimplicialSet.from_json(load_json(self.path('ssets', name)))

    def _sset_ref(self, ref):
        if isinstance(ref, dict):
            return FinSimplicialSet.from_json(ref)
        return self.sset(ref)

    def sset_map(self, name):
        data = load_json(self.path('maps', name))
        try:
            source, target = self._sset_ref(data['source']), self._sset_ref(data['target'])
        except KeyError as e:
            raise ValidationError('map {0} needs a source and a target: {1!r}'.format(name, e))
        return SSetMap.from_json(data, source, target)

    @memoize
    def prop(self, name):
        data = load_json(self.path('properads', name))
        if data.get('kind') == 'free':
            return free_prop_from_json(data)
        return prop_from_json(data)

    def morphism(self, name):
        data = load_json(self.path('morphisms', name))
        try:
            source, target = self.prop(data['source']), self.prop(data['target'])
        except KeyError as e:
            raise ValidationError('morphism {0} needs a source and a target: {1!r}'.format(name, e))
        return morphism_from_json(data, source, target)

    def load_all(self):
        """Parse every fixture; returns {kind: [names]} and raises on the first invalid one."""
        loaders = {'graphs': self.graph, 'ssets': self.sset, 'maps': self.sset_map,
                   'properads': self.prop, 'morphisms': self.morphism}
        out = {}
        for kind in KINDS:
            for name in self.names(kind):
                try:
                    loaders[kind](name)
                except ValidationError as e:
                    raise ValidationError('{0}/{1}: {2}'.format(kind, name, e.args[0]), e.problems)
                out.setdefault(kind, []).append(name)
        return out
