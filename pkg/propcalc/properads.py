"""Gr-props enriched in finite simplicial sets.

A GrProp pairs a pasting scheme and a color set with a composer. The
composer supplies entries, units and the composition γ over a graph;
GrProp checks arguments, splits off common degeneracies and memoises.
"""
import itertools
import random

import networkx as nx

from propcalc import ssets
from propcalc.categories import FiniteCategory, FiniteFunctor, category_from_json
from propcalc.common import (BoundError, Bounds, ProfileError, PropCalcError, SchemeError, ValidationError,
                             report, sample_product, sort_key)
from propcalc.common.decorators import memoize
from propcalc.graphs import (Biprofile, ColoredGraph, Scheme, attach_vertex, biprofiles, canonical_form, color_set,
                             decorated_form, enumerate_graph_objects, freeze, insert_vertex, make_corolla, recolor,
                             remove_vertex, vertex_digraph)
from propcalc.ssets import FinSimplicialSet, Simplex, SSetMap, normalize, simplex_dim
from propcalc.substitution import collapse_moves, collapsed_labels, grafting_template, piece_labels


def constant(cell, degree):
    """The degree-n degeneracy of a vertex."""
    return Simplex(cell, (0,) * (degree + 1))


def _is_surjection(surj, k):
    return surj[0] == 0 and surj[-1] == k and all(b - a in (0, 1) for a, b in zip(surj, surj[1:]))


def strip_units(graph, labels, is_unit):
    """Remove every (c;c)-vertex whose label satisfies is_unit(graph, v, label)."""
    labels = list(labels)
    for v in reversed(range(len(graph.vertices))):
        if is_unit(graph, v, labels[v]):
            graph = remove_vertex(graph, v)
            del labels[v]
    return graph, tuple(labels)


class GrProp(object):
    def __init__(self, scheme, colors, composer, arity_bound=4, dim_bound=3, name=''):
        self.scheme = Scheme.parse(scheme)
        self.colors = color_set(colors)
        self.composer = composer
        self.arity_bound = arity_bound
        self.dim_bound = dim_bound
        self.name = name or composer.kind

    def __repr__(self):
        return 'GrProp({0}, {1}, colors={2})'.format(self.name, self.scheme.value, ','.join(self.colors))

    def entry(self, bp):
        return self._entry(Biprofile.parse(bp))

    @memoize
    def _entry(self, bp):
        unknown = bp.colors() - set(self.colors)
        if unknown:
            raise ProfileError('{0} uses colors {1} outside {2}'.format(bp, sorted(unknown), self.name))
        if bp.size > self.arity_bound:
            raise BoundError('entry {0} exceeds the arity bound {1}'.format(bp, self.arity_bound))
        return self.composer.entry(self, bp)

    def unit(self, color):
        if color not in self.colors:
            raise ProfileError('{0!r} is not a color of {1}'.format(color, self.name))
        return self.composer.unit(self, color)

    def biprofiles(self):
        return biprofiles(self.colors, self.arity_bound, self.arity_bound, self.arity_bound)

    def decorations(self, graph, degree=0):
        """Per vertex, every degree-n simplex of its entry."""
        return [self.entry(graph.vertex_profile(v)).simplices(degree) for v in range(len(graph.vertices))]

    @memoize
    def _member(self, graph):
        return self.scheme.contains(graph)

    def gamma(self, graph, labels, degree=None):
        """γ_G applied to one simplex per vertex; all simplices share one degree."""
        labels = tuple(Simplex(*s) for s in labels)
        if len(labels) != len(graph.vertices):
            raise ProfileError('{0} labels for {1} vertices'.format(len(labels), len(graph.vertices)))
        if degree is None:
            degree = simplex_dim(labels[0]) if labels else 0
        if not self._member(graph):
            raise SchemeError('{0!r} is not in the {1} scheme'.format(graph, self.scheme.value))
        self.entry(graph.biprofile())
        for v, s in enumerate(labels):
            X = self.entry(graph.vertex_profile(v))
            if s.cell not in X.dims or simplex_dim(s) != degree or not _is_surjection(s.surj, X.dims[s.cell]):
                raise ProfileError('label {0!r} of vertex {1} is not a {2}-simplex of {3}'.format(
                    s, v, degree, graph.vertex_profile(v)))
        if not labels:
            return self._compose(graph, labels, degree)
        reduced = normalize(labels)
        value = self._compose(graph, reduced.cell, reduced.surj[-1])
        return Simplex(value.cell, tuple(value.surj[x] for x in reduced.surj))

    @memoize
    def _compose(self, graph, labels, degree):
        return self.composer.compose(self, graph, labels, degree)

    def compose(self, graph, cells):
        """γ on vertices: one 0-cell per vertex, returning a 0-cell."""
        return self.gamma(graph, [constant(c, 0) for c in cells], 0).cell

    def to_json(self):
        data = {
            'kind': self.composer.kind,
            'name': self.name,
            'scheme': self.scheme.value,
            'colors': list(self.colors),
            'arity_bound': self.arity_bound,
            'dim_bound': self.dim_bound,
        }
        data.update(self.composer.to_json())
        return data


class Composer(object):
    kind = None

    def entry(self, prop, bp):
        raise NotImplementedError

    def unit(self, prop, color):
        raise NotImplementedError

    def compose(self, prop, graph, labels, degree):
        """labels are jointly nondegenerate simplices of the given degree."""
        raise NotImplementedError

    def to_json(self):
        return {}


class TerminalComposer(Composer):
    kind = 'terminal'

    def entry(self, prop, bp):
        return ssets.point('*')

    def unit(self, prop, color):
        return '*'

    def compose(self, prop, graph, labels, degree):
        return constant('*', degree)


class EndomorphismComposer(Composer):
    """End(S): entry (a;b) is the discrete set of functions S_a -> S_b.

    A function is stored as the tuple of its output tuples, one per input
    tuple in itertools.product order.
    """
    kind = 'endomorphism'

    def __init__(self, sets):
        self.sets = dict((c, tuple(xs)) for c, xs in sets.items())

    def _rows(self, colors):
        return list(itertools.product(*[self.sets[c] for c in colors]))

    def _index(self, colors, args):
        index = 0
        for c, x in zip(colors, args):
            index = index * len(self.sets[c]) + self.sets[c].index(x)
        return index

    def entry(self, prop, bp):
        rows = self._rows(bp.inputs)
        choices = self._rows(bp.outputs)
        return ssets.discrete(itertools.product(choices, repeat=len(rows)), 'End({0})'.format(bp))

    def unit(self, prop, color):
        return tuple((x,) for x in self.sets[color])

    def evaluate(self, graph, cells, row):
        value = dict(zip(graph.graph_inputs, row))
        for v in nx.topological_sort(vertex_digraph(graph)):
            ins, outs = graph.vertices[v]
            table = cells[v]
            result = table[self._index(graph.vertex_profile(v).inputs, tuple(value[e] for e in ins))]
            value.update(zip(outs, result))
        return tuple(value[e] for e in graph.graph_outputs)

    def compose(self, prop, graph, labels, degree):
        cells = [s.cell for s in labels]
        rows = self._rows(graph.biprofile().inputs)
        return constant(tuple(self.evaluate(graph, cells, row) for row in rows), degree)

    def to_json(self):
        return {'sets': dict((c, list(xs)) for c, xs in self.sets.items())}


class ZeroComposer(Composer):
    """X as the entries of arity n, m >= 1; everything with two or more vertices composes to '*'.

    (c;c) entries carry an extra vertex 'id' for the unit. Entries with no
    inputs or no outputs are empty.
    """
    kind = 'zero'

    def __init__(self, space, spaces=None):
        self.space = space
        self.spaces = dict(spaces or {})

    def space_for(self, bp):
        return self.spaces.get(str(bp.sorted()), self.space)

    def entry(self, prop, bp):
        if not bp.inputs or not bp.outputs:
            return ssets.empty()
        X = self.space_for(bp)
        cells = dict((('x', c), k) for c, k in X.dims.items())
        faces = dict((('x', c), [Simplex(('x', f.cell), f.surj) for f in X.faces[c]]) for c in X.dims)
        cells['*'] = 0
        if len(bp.inputs) == 1 and bp.inputs == bp.outputs:
            cells['id'] = 0
        return FinSimplicialSet(cells, faces, 'Z({0})'.format(bp))

    def unit(self, prop, color):
        return 'id'

    def compose(self, prop, graph, labels, degree):
        graph, labels = strip_units(graph, labels, lambda g, v, s: s.cell == 'id')
        if not graph.vertices:
            return constant('id', degree)
        if len(graph.vertices) == 1:
            return labels[0]
        return constant('*', degree)

    def to_json(self):
        return {'space': self.space.to_json(),
                'spaces': dict((bp, X.to_json()) for bp, X in self.spaces.items())}


class CategoryComposer(Composer):
    """A small category as a properad concentrated in arity (1;1)."""
    kind = 'category'

    def __init__(self, category):
        self.category = category

    def entry(self, prop, bp):
        if len(bp.inputs) != 1 or len(bp.outputs) != 1:
            return ssets.empty()
        return ssets.discrete(self.category.hom(bp.inputs[0], bp.outputs[0]), 'hom({0})'.format(bp))

    def unit(self, prop, color):
        return self.category.identities[color]

    def compose(self, prop, graph, labels, degree):
        result = self.category.identities[graph.biprofile().inputs[0]]
        for v in nx.topological_sort(vertex_digraph(graph)):
            result = self.category.compose(labels[v].cell, result)
        return constant(result, degree)

    def to_json(self):
        return {'category': self.category.to_json()}


class TableComposer(Composer):
    """Discrete entries with γ read off a table of decorated two-vertex graphs.

    Larger graphs reduce through collapse moves onto tabulated pieces.
    """
    kind = 'table'

    def __init__(self, entries, units, table):
        self.entries = dict((Biprofile.parse(bp), X) for bp, X in entries.items())
        self.units = dict(units)
        self.table = dict(table)

    def entry(self, prop, bp):
        return self.entries.get(bp) or ssets.empty()

    def unit(self, prop, color):
        return self.units[color]

    def _is_unit(self, graph, v, s):
        bp = graph.vertex_profile(v)
        return len(bp.inputs) == 1 and bp.inputs == bp.outputs and s.cell == self.units.get(bp.inputs[0])

    def compose(self, prop, graph, labels, degree):
        graph, labels = strip_units(graph, labels, self._is_unit)
        if not graph.vertices:
            return constant(self.units[graph.biprofile().inputs[0]], degree)
        ins, outs = graph.vertices[0]
        if len(graph.vertices) == 1 and graph.graph_inputs == ins and graph.graph_outputs == outs:
            return labels[0]
        key = decorated_form(graph, [s.cell for s in labels])
        if key in self.table:
            return constant(self.table[key], degree)
        if len(graph.vertices) > 2:
            for move in collapse_moves(graph, prop.scheme, orderings='one'):
                if len(move.members) != 2:
                    continue
                try:
                    value = self.compose(prop, move.piece, piece_labels(move, labels), degree)
                except BoundError:
                    continue
                return self.compose(prop, move.graph, collapsed_labels(move, labels, value), degree)
        raise BoundError('no γ table entry for {0}'.format(key))

    def to_json(self):
        return {
            'entries': [{'biprofile': str(bp), 'cells': X.all_cells()} for bp, X in sorted(self.entries.items())],
            'units': self.units,
            'table': [{'graph': key.graph().to_json(), 'labels': list(key.labels()), 'value': value}
                      for key, value in sorted(self.table.items())],
        }


class CorruptedComposer(Composer):
    """A deliberately broken composer: two-vertex graphs return the first label when its profile matches.

    Used as a negative control for the axiom checks.
    """
    kind = 'corrupted'

    def __init__(self, base):
        self.base = base

    def entry(self, prop, bp):
        return self.base.entry(prop, bp)

    def unit(self, prop, color):
        return self.base.unit(prop, color)

    def compose(self, prop, graph, labels, degree):
        if len(graph.vertices) == 2 and graph.vertex_profile(0) == graph.biprofile():
            return labels[0]
        return self.base.compose(prop, graph, labels, degree)

    def to_json(self):
        data = {'base_kind': self.base.kind}
        data.update(self.base.to_json())
        return data


class InitialComposer(Composer):
    """The initial object: no colors, and in the prop scheme a point in (;)."""
    kind = 'initial'

    def entry(self, prop, bp):
        if prop.scheme is Scheme.PROP and not bp.size:
            return ssets.point('*')
        return ssets.empty()

    def unit(self, prop, color):
        raise ProfileError('the initial object has no colors')

    def compose(self, prop, graph, labels, degree):
        return constant('*', degree)


def terminal_prop(scheme=Scheme.PROPERAD, colors=('c',), arity_bound=4, dim_bound=3):
    return GrProp(scheme, colors, TerminalComposer(), arity_bound, dim_bound, 'terminal')


def endomorphism_prop(S, scheme=Scheme.PROP, colors=('c',), arity_bound=4):
    """End(S); S is one iterable used for every color, or a dict color -> iterable."""
    if not isinstance(S, dict):
        S = dict((c, tuple(S)) for c in colors)
    return GrProp(scheme, colors, EndomorphismComposer(S), arity_bound, 0,
                  'End({0})'.format(','.join(str(len(S[c])) for c in colors)))


def zero_properad(space, scheme=Scheme.PROPERAD, colors=('c',), arity_bound=2, dim_bound=3, spaces=None):
    scheme = Scheme.parse(scheme)
    if scheme is Scheme.PROP:
        raise SchemeError('the zero construction needs a connected scheme')
    return GrProp(scheme, colors, ZeroComposer(space, spaces), arity_bound, dim_bound,
                  'Z({0})'.format(space.name))


def category_properad(category, scheme=Scheme.PROPERAD, arity_bound=2):
    scheme = Scheme.parse(scheme)
    if scheme is Scheme.PROP:
        raise SchemeError('a category is a properad or dioperad, not a prop')
    return GrProp(scheme, category.objects, CategoryComposer(category), arity_bound, 0,
                  category.name or 'category')


def monoid_properad(elements, product, unit, scheme=Scheme.PROPERAD, color='c', arity_bound=2):
    return category_properad(FiniteCategory.from_monoid(elements, product, unit, color), scheme, arity_bound)


def table_properad(colors, entries, units, table, scheme=Scheme.PROPERAD, arity_bound=2, name='table'):
    """entries: bp -> cells; table: (graph, labels, value) triples."""
    sets = dict((Biprofile.parse(bp), ssets.discrete(cells, 'T({0})'.format(bp))) for bp, cells in entries.items())
    keyed = dict((decorated_form(graph, labels), value) for graph, labels, value in table)
    return GrProp(scheme, colors, TableComposer(sets, units, keyed), arity_bound, 0, name)


def corrupted_prop(P):
    return GrProp(P.scheme, P.colors, CorruptedComposer(P.composer), P.arity_bound, P.dim_bound,
                  'corrupted ' + P.name)


def initial_prop(scheme=Scheme.PROPERAD, arity_bound=4):
    return GrProp(scheme, (), InitialComposer(), arity_bound, 0, 'initial')


def _freeze_keys(pairs):
    return dict((freeze(k), v) for k, v in pairs)


def prop_from_json(data):
    """Build a GrProp from a fixture object; data['kind'] selects the composer."""
    try:
        kind = data['kind']
        scheme = Scheme.parse(data.get('scheme', 'properad'))
        colors = tuple(data.get('colors', ('c',)))
        arity_bound = data.get('arity_bound', 2)
        if kind == 'terminal':
            P = terminal_prop(scheme, colors, arity_bound, data.get('dim_bound', 3))
        elif kind == 'endomorphism':
            P = endomorphism_prop(dict((c, [freeze(x) for x in xs]) for c, xs in data['sets'].items()),
                                  scheme, colors, arity_bound)
        elif kind == 'zero':
            spaces = dict((bp, FinSimplicialSet.from_json(X)) for bp, X in data.get('spaces', {}).items())
            P = zero_properad(FinSimplicialSet.from_json(data['space']), scheme, colors, arity_bound,
                              data.get('dim_bound', 3), spaces)
        elif kind == 'category':
            P = category_properad(category_from_json(data['category']), scheme, arity_bound)
        elif kind == 'monoid':
            products = _freeze_keys(((x, y), z) for x, y, z in data['products'])
            P = monoid_properad([freeze(x) for x in data['elements']],
                                lambda x, y: products[(x, y)], freeze(data['unit']), scheme,
                                colors[0], arity_bound)
            problems = P.composer.category.check_laws()['violations']
            if problems:
                raise ValidationError('monoid laws fail', [repr(p) for p in problems])
        elif kind == 'table':
            entries = dict((item['biprofile'], [freeze(c) for c in item['cells']]) for item in data['entries'])
            table = [(ColoredGraph.from_json(item['graph']), [freeze(c) for c in item['labels']],
                      freeze(item['value'])) for item in data['table']]
            units = dict((c, freeze(u)) for c, u in data['units'].items())
            P = table_properad(colors, entries, units, table, scheme, arity_bound)
        elif kind == 'initial':
            P = initial_prop(scheme, arity_bound)
        elif kind == 'corrupted':
            P = corrupted_prop(prop_from_json(data['base']))
        else:
            raise ValidationError('unknown prop kind {0!r}'.format(kind))
    except (KeyError, TypeError) as e:
        raise ValidationError('malformed prop JSON: {0!r}'.format(e))
    if data.get('name'):
        P.name = data['name']
    return P


def _test_profiles(P, vertex_arity_bound):
    return [bp for bp in biprofiles(P.colors, vertex_arity_bound[0], vertex_arity_bound[1], P.arity_bound)
            if P.entry(bp).dims]


def sample_graphs(P, bounds, vertex_arity_bound, max_graphs, rng, min_vertices=1):
    """Scheme graphs over nonempty vertex entries, sampled down to max_graphs."""
    profiles = _test_profiles(P, vertex_arity_bound)
    graphs = []
    for bp in P.biprofiles():
        for g in enumerate_graph_objects(P.scheme, P.colors, bp, bounds.vertices, vertex_profiles=profiles):
            if len(g.vertices) >= min_vertices:
                graphs.append(g)
    if len(graphs) > max_graphs:
        graphs = [graphs[i] for i in sorted(rng.sample(range(len(graphs)), max_graphs))]
    return graphs


def _unit_grafted(P, bp, s):
    """The corolla of bp with a unit vertex on every leg, and its labels."""
    graph = make_corolla(bp)
    labels = [s]
    degree = simplex_dim(s)
    for e in list(graph.graph_inputs) + list(graph.graph_outputs):
        graph, _ = insert_vertex(graph, e)
        labels.append(constant(P.unit(graph.edges[e]), degree))
    return graph, tuple(labels)


def _describe(graph, labels):
    return {'graph': str(canonical_form(graph)), 'labels': [[s.cell, list(s.surj)] for s in labels]}


def check_axioms(P, bounds=None, vertex_arity_bound=(2, 2), sample=20, seed=0, max_graphs=200):
    """Unit, associativity, equivariance and face compatibility of γ on small graphs.

    Associativity and equivariance are tested through every collapse move
    of every test graph, leg orderings included.
    """
    bounds = bounds or Bounds()
    rng = random.Random(seed)
    checked = 0
    skipped = 0
    violations = []
    top = min(P.dim_bound, bounds.dim, 2)
    for bp in _test_profiles(P, vertex_arity_bound):
        X = P.entry(bp)
        corolla = make_corolla(bp)
        for degree in range(top + 1):
            chosen, _ = sample_product([X.simplices(degree)], sample, rng)
            for (s,) in chosen:
                checked += 2
                if P.gamma(corolla, (s,)) != s:
                    violations.append(dict(law='unit', **_describe(corolla, (s,))))
                grafted, labels = _unit_grafted(P, bp, s)
                try:
                    value = P.gamma(grafted, labels)
                except BoundError:
                    skipped += 1
                    continue
                if value != s:
                    violations.append(dict(law='unit', **_describe(grafted, labels)))

    for graph in sample_graphs(P, bounds, vertex_arity_bound, max_graphs, rng, min_vertices=2):
        choices, _ = sample_product(P.decorations(graph, 0), sample, rng)
        moves = list(collapse_moves(graph, P.scheme, orderings='all'))
        for labels in choices:
            value = P.gamma(graph, labels)
            for move in moves:
                checked += 1
                try:
                    inner = P.gamma(move.piece, piece_labels(move, labels))
                    outer = P.gamma(move.graph, collapsed_labels(move, labels, inner))
                except BoundError:
                    skipped += 1
                    continue
                if outer != value:
                    law = 'equivariance' if len(move.members) == 1 else 'associativity'
                    violations.append(dict(law=law, members=list(move.members), **_describe(graph, labels)))
        for degree in range(1, top + 1):
            faces_checked, faces_failed = _check_faces(P, graph, degree, sample, rng)
            checked += faces_checked
            violations.extend(faces_failed)
    return report(checked, violations, skipped=skipped)


def _check_faces(P, graph, degree, sample, rng):
    checked = 0
    violations = []
    entries = [P.entry(graph.vertex_profile(v)) for v in range(len(graph.vertices))]
    choices, _ = sample_product(P.decorations(graph, degree), sample, rng)
    target = P.entry(graph.biprofile())
    for labels in choices:
        value = P.gamma(graph, labels)
        for i in range(degree + 1):
            checked += 1
            faces = tuple(X.face(s, i) for X, s in zip(entries, labels))
            if target.face(value, i) != P.gamma(graph, faces, degree - 1):
                violations.append(dict(law='faces', face=i, **_describe(graph, labels)))
    return checked, violations


class UnderlyingCategory(object):
    """The simplicial category U P: objects are colors and hom(a, b) is the entry (a;b)."""

    def __init__(self, prop):
        self.prop = prop
        self.objects = prop.colors

    def hom(self, a, b):
        return self.prop.entry(Biprofile((a,), (b,)))

    def identity(self, a):
        return self.prop.unit(a)

    def compose(self, g, f, a, b, c):
        """g ∘ f for simplices f of hom(a, b) and g of hom(b, c)."""
        graph = grafting_template(Biprofile((a,), (b,)), Biprofile((b,), (c,)))
        return self.prop.gamma(graph, (f, g))

    @memoize
    def components(self, a, b):
        return ssets.pi0(self.hom(a, b))

    def arrow(self, a, b, cell):
        """The π0 morphism id of a vertex of hom(a, b): (a, b, least vertex of its component)."""
        comps = self.components(a, b)
        return (a, b, comps.classes[comps.index[cell]][0])


def pi0_category(view):
    """π0 of a simplicial category given as an UnderlyingCategory.

    Composites are computed on every pair of representatives and must agree.
    """
    objects = view.objects
    homs = {}
    for a in objects:
        for b in objects:
            homs[(a, b)] = [(a, b, members[0]) for members in view.components(a, b).classes]
    composition = {}
    for a, b, c in itertools.product(objects, repeat=3):
        for f_class in view.components(a, b).classes:
            for g_class in view.components(b, c).classes:
                results = set()
                for x in f_class:
                    for y in g_class:
                        value = view.compose(constant(y, 0), constant(x, 0), a, b, c)
                        results.add(view.arrow(a, c, value.cell))
                if len(results) != 1:
                    raise PropCalcError('composition on components of {0} depends on representatives'.format(
                        view.prop.name))
                composition[((b, c, g_class[0]), (a, b, f_class[0]))] = results.pop()
    identities = dict((a, view.arrow(a, a, view.identity(a))) for a in objects)
    return FiniteCategory(objects, homs, composition, identities, 'π0 U ' + view.prop.name)


def _plug_map(P, bp, graph, a):
    X = P.entry(bp)
    Y = P.entry(graph.biprofile())
    assignment = {}
    for cell, k in X.dims.items():
        assignment[cell] = P.gamma(graph, (X.point(cell), constant(a, k)), k)
    return SSetMap(X, Y, assignment, '{0} -> {1}'.format(bp, graph.biprofile()))


def precompose(P, bp, i, a, color):
    """(- ∘_i a): P(bp) -> P(bp with input i recolored), for a vertex a of P(color; bp.inputs[i])."""
    bp = Biprofile.parse(bp)
    if a not in P.entry(Biprofile((color,), (bp.inputs[i],))).cells(0):
        raise ProfileError('{0!r} is not a vertex of ({1};{2})'.format(a, color, bp.inputs[i]))
    return _plug_map(P, bp, attach_vertex(bp, 'input', i, color), a)


def postcompose(P, bp, j, b, color):
    """(b ∘_j -): P(bp) -> P(bp with output j recolored), for a vertex b of P(bp.outputs[j]; color)."""
    bp = Biprofile.parse(bp)
    if b not in P.entry(Biprofile((bp.outputs[j],), (color,))).cells(0):
        raise ProfileError('{0!r} is not a vertex of ({1};{2})'.format(b, bp.outputs[j], color))
    return _plug_map(P, bp, attach_vertex(bp, 'output', j, color), b)


def change_of_objects(P, bp, inputs=(), outputs=()):
    """Pre- and postcompose with 1-ary vertices, one optional (vertex, color) per leg."""
    bp = Biprofile.parse(bp)
    current = SSetMap.identity(P.entry(bp))
    for i, choice in enumerate(inputs):
        if choice is not None:
            step = precompose(P, bp, i, choice[0], choice[1])
            current = step.compose(current)
            bp = bp.replace_input(i, choice[1])
    for j, choice in enumerate(outputs):
        if choice is not None:
            step = postcompose(P, bp, j, choice[0], choice[1])
            current = step.compose(current)
            bp = bp.replace_output(j, choice[1])
    return current


class PropMorphism(object):
    """A color map with one simplicial map per entry.

    Entry maps come from explicit maps keyed by biprofile, or from
    rule(bp, source_entry, target_entry) returning an SSetMap or assignment.
    """

    def __init__(self, source, target, color_map, maps=None, rule=None, name=''):
        if source.scheme != target.scheme:
            raise SchemeError('{0} and {1} have different schemes'.format(source.name, target.name))
        self.source = source
        self.target = target
        self.color_map = dict(color_map)
        missing = [c for c in source.colors if self.color_map.get(c) not in target.colors]
        if missing:
            raise ValidationError('color map is undefined or leaves the target on {0}'.format(missing))
        self.maps = dict((Biprofile.parse(bp), m) for bp, m in (maps or {}).items())
        self.rule = rule
        self.name = name or '{0} -> {1}'.format(source.name, target.name)

    def __repr__(self):
        return 'PropMorphism({0})'.format(self.name)

    def entry_map(self, bp):
        return self._entry_map(Biprofile.parse(bp))

    @memoize
    def _entry_map(self, bp):
        X = self.source.entry(bp)
        Y = self.target.entry(bp.map(self.color_map))
        if bp in self.maps:
            m = self.maps[bp]
        elif self.rule is not None:
            m = self.rule(bp, X, Y)
        elif not X.dims:
            m = {}
        else:
            raise ValidationError('{0} has no map for the entry {1}'.format(self.name, bp))
        if isinstance(m, SSetMap):
            return m
        return SSetMap(X, Y, m, '{0}@{1}'.format(self.name, bp))

    def __call__(self, bp, s):
        return self.entry_map(bp)(s)

    def biprofiles(self):
        return [bp for bp in self.source.biprofiles() if bp.size <= self.target.arity_bound]

    def compose(self, other):
        """self ∘ other."""
        def rule(bp, X, Z):
            return self.entry_map(bp.map(other.color_map)).compose(other.entry_map(bp))
        color_map = dict((a, self.color_map[b]) for a, b in other.color_map.items())
        return PropMorphism(other.source, self.target, color_map, rule=rule,
                            name='{0} ∘ {1}'.format(self.name, other.name))

    @classmethod
    def identity(cls, P):
        return cls(P, P, dict((c, c) for c in P.colors), rule=lambda bp, X, Y: SSetMap.identity(X),
                   name='id ' + P.name)

    def check(self, bounds=None, vertex_arity_bound=None, sample=10, seed=0, max_graphs=100):
        """Entry maps are simplicial, units go to units and γ is preserved on small graphs.

        Test graphs use every vertex arity up to the source's arity bound
        unless vertex_arity_bound narrows them.
        """
        bounds = bounds or Bounds()
        if vertex_arity_bound is None:
            vertex_arity_bound = (self.source.arity_bound, self.source.arity_bound)
        rng = random.Random(seed)
        checked = 0
        violations = []
        for bp in self.biprofiles():
            checked += 1
            problems = self.entry_map(bp).validate()
            if problems:
                violations.append({'law': 'simplicial', 'biprofile': str(bp), 'problems': problems})
        if violations:
            return report(checked, violations)
        for c in self.source.colors:
            bp = Biprofile((c,), (c,))
            if bp.size > self.source.arity_bound:
                continue
            checked += 1
            if self(bp, constant(self.source.unit(c), 0)) != constant(self.target.unit(self.color_map[c]), 0):
                violations.append({'law': 'unit', 'color': c})
        for graph in sample_graphs(self.source, bounds, vertex_arity_bound, max_graphs, rng, min_vertices=0):
            image = recolor(graph, self.color_map)
            choices, _ = sample_product(self.source.decorations(graph, 0), sample, rng)
            for labels in choices:
                checked += 1
                left = self(graph.biprofile(), self.source.gamma(graph, labels, 0))
                mapped = [self(graph.vertex_profile(v), s) for v, s in enumerate(labels)]
                if left != self.target.gamma(image, mapped, 0):
                    violations.append(dict(law='composition', **_describe(graph, labels)))
        return report(checked, violations)


def pi0_functor(f):
    """π0 U f as a functor of finite categories."""
    source_view = UnderlyingCategory(f.source)
    target_view = UnderlyingCategory(f.target)
    C = pi0_category(source_view)
    D = pi0_category(target_view)
    morphism_map = {}
    for arrow in C.morphisms():
        a, b, cell = arrow
        image = f(Biprofile((a,), (b,)), constant(cell, 0))
        morphism_map[arrow] = target_view.arrow(f.color_map[a], f.color_map[b], image.cell)
    return FiniteFunctor(C, D, dict((a, f.color_map[a]) for a in C.objects), morphism_map, 'π0 U ' + f.name)


def initial_morphism(P):
    source = initial_prop(P.scheme, P.arity_bound)

    def rule(bp, X, Y):
        if not X.dims:
            return {}
        return {'*': P.gamma(ColoredGraph(), (), 0)}
    return PropMorphism(source, P, {}, rule=rule, name='initial -> ' + P.name)


def zero_morphism(P, Q, phi, color_map=None):
    """The morphism of zero properads induced by phi: X -> Y, or by a dict of maps per sorted biprofile."""
    if color_map is None:
        color_map = dict((c, c) for c in P.colors)

    def rule(bp, X, Y):
        if not X.dims:
            return {}
        m = phi.get(str(bp.sorted())) if isinstance(phi, dict) else phi
        assignment = {'*': Y.point('*')}
        if 'id' in X.dims:
            assignment['id'] = Y.point('id')
        for cell, image in m.assignment.items():
            assignment[('x', cell)] = Simplex(('x', image.cell), image.surj)
        return assignment
    return PropMorphism(P, Q, color_map, rule=rule, name='Z({0})'.format(getattr(phi, 'name', '') or 'φ'))


def category_morphism(P, Q, F):
    """The morphism of category properads given by a functor F."""
    def rule(bp, X, Y):
        return dict((f, constant(F(f), 0)) for f in X.dims)
    return PropMorphism(P, Q, F.object_map, rule=rule, name=F.name or 'F')


def morphism_from_json(data, source, target):
    """Build a PropMorphism between already loaded props; data['kind'] selects how."""
    try:
        kind = data.get('kind', 'maps')
        if kind == 'identity':
            f = PropMorphism.identity(source)
        elif kind == 'initial':
            f = initial_morphism(target)
        elif kind == 'zero':
            color_map = data.get('color_map')
            phi = SSetMap.from_json(data['map'], source.composer.space, target.composer.space)
            f = zero_morphism(source, target, phi, color_map)
        elif kind == 'functor':
            C, D = source.composer.category, target.composer.category
            F = FiniteFunctor(C, D, data['color_map'],
                              dict((freeze(x), freeze(y)) for x, y in data['morphism_map']))
            f = category_morphism(source, target, F)
        elif kind == 'maps':
            maps = {}
            for item in data['maps']:
                maps[item['biprofile']] = dict((freeze(cell), Simplex(freeze(image[0]), tuple(image[1])))
                                               for cell, image in item['assignment'])
            f = PropMorphism(source, target, data['color_map'], maps)
        else:
            raise ValidationError('unknown morphism kind {0!r}'.format(kind))
    except (KeyError, TypeError, AttributeError) as e:
        raise ValidationError('malformed morphism JSON: {0!r}'.format(e))
    if data.get('name'):
        f.name = data['name']
    return f


def morphism_to_json(f):
    entries = []
    for bp in f.biprofiles():
        m = f.entry_map(bp)
        if m.assignment:
            entries.append({'biprofile': str(bp),
                            'assignment': [[cell, [image.cell, list(image.surj)]] for cell, image in
                                           sorted(m.assignment.items(), key=lambda item: sort_key(item[0]))]})
    return {'kind': 'maps', 'name': f.name, 'color_map': f.color_map, 'maps': entries}
