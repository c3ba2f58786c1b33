"""Colored directed wheel-free graphs with ordered legs and ports.

A graph is stored as plain tuples:

  vertices       tuple of (input edge ids, output edge ids), in port order
  edges          dict of edge id -> color
  graph_inputs   edge ids whose source end is dangling, in leg order
  graph_outputs  edge ids whose target end is dangling, in leg order

An edge's source is the vertex listing it among its outputs and its target
is the vertex listing it among its inputs. An edge with both ends dangling
(an isolated edge) appears in both leg lists.
"""
from collections import namedtuple
from enum import Enum
import itertools
import json

import networkx as nx
from networkx.algorithms import isomorphism

from propcalc.common import BoundError, ProfileError, ValidationError, sort_key


DEFAULT_ISO_BOUND = 8


def _split(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(part.strip() for part in text.split(','))


class Biprofile(namedtuple('Biprofile', 'inputs outputs')):
    """An ordered pair of color lists, written ``c,c;d``."""
    __slots__ = ()

    def __new__(cls, inputs=(), outputs=()):
        return super(Biprofile, cls).__new__(cls, tuple(inputs), tuple(outputs))

    @classmethod
    def parse(cls, text):
        if isinstance(text, Biprofile):
            return text
        if isinstance(text, (list, tuple)):
            return cls(*text)
        if ';' not in text:
            raise ValidationError('biprofile {0!r} has no ";"'.format(text))
        left, right = text.split(';', 1)
        return cls(_split(left), _split(right))

    @property
    def arity(self):
        return (len(self.inputs), len(self.outputs))

    @property
    def size(self):
        return len(self.inputs) + len(self.outputs)

    def colors(self):
        return set(self.inputs) | set(self.outputs)

    def sorted(self):
        return Biprofile(sorted(self.inputs), sorted(self.outputs))

    def replace_input(self, i, color):
        return Biprofile(self.inputs[:i] + (color,) + self.inputs[i + 1:], self.outputs)

    def replace_output(self, j, color):
        return Biprofile(self.inputs, self.outputs[:j] + (color,) + self.outputs[j + 1:])

    def map(self, color_map):
        return Biprofile([color_map[c] for c in self.inputs], [color_map[c] for c in self.outputs])

    def __str__(self):
        return ','.join(self.inputs) + ';' + ','.join(self.outputs)


def color_set(colors):
    """Return colors as a tuple, checking they are pairwise distinct."""
    colors = tuple(colors)
    if len(set(colors)) != len(colors):
        raise ValidationError('duplicate colors in {0!r}'.format(colors))
    return colors


def biprofiles(colors, max_inputs, max_outputs, max_size=None):
    """All biprofiles over colors within the given arities, in a fixed order."""
    out = []
    for n in range(max_inputs + 1):
        for m in range(max_outputs + 1):
            if max_size is not None and n + m > max_size:
                continue
            for ins in itertools.product(colors, repeat=n):
                for outs in itertools.product(colors, repeat=m):
                    out.append(Biprofile(ins, outs))
    return sorted(out, key=lambda bp: (bp.size, len(bp.inputs), bp))


class ColoredGraph(object):
    __slots__ = ('vertices', 'edges', 'graph_inputs', 'graph_outputs', '_ends')

    def __init__(self, vertices=(), edges=None, graph_inputs=(), graph_outputs=()):
        self.vertices = tuple((tuple(ins), tuple(outs)) for ins, outs in vertices)
        self.edges = dict(edges or {})
        self.graph_inputs = tuple(graph_inputs)
        self.graph_outputs = tuple(graph_outputs)
        self._ends = None

    def ends(self):
        """Return (sources, targets): edge id -> (vertex, port)."""
        if self._ends is None:
            sources = {}
            targets = {}
            for v, (ins, outs) in enumerate(self.vertices):
                for port, e in enumerate(ins):
                    targets[e] = (v, port)
                for port, e in enumerate(outs):
                    sources[e] = (v, port)
            self._ends = (sources, targets)
        return self._ends

    def __len__(self):
        return len(self.vertices)

    def color(self, e):
        return self.edges[e]

    def vertex_profile(self, v):
        ins, outs = self.vertices[v]
        return Biprofile([self.edges[e] for e in ins], [self.edges[e] for e in outs])

    def biprofile(self):
        return Biprofile([self.edges[e] for e in self.graph_inputs],
                         [self.edges[e] for e in self.graph_outputs])

    def internal_edges(self):
        sources, targets = self.ends()
        return sorted(e for e in self.edges if e in sources and e in targets)

    def key(self):
        return (self.vertices, tuple(sorted(self.edges.items())), self.graph_inputs, self.graph_outputs)

    def __eq__(self, other):
        return isinstance(other, ColoredGraph) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return 'ColoredGraph({0} vertices, {1} edges, {2})'.format(
            len(self.vertices), len(self.edges), self.biprofile())

    def to_json(self):
        return {
            'colors': sorted(set(self.edges.values()), key=sort_key),
            'vertices': [{'inputs': list(ins), 'outputs': list(outs)} for ins, outs in self.vertices],
            'edges': [{'id': e, 'color': self.edges[e]} for e in sorted(self.edges)],
            'graph_inputs': list(self.graph_inputs),
            'graph_outputs': list(self.graph_outputs),
        }

    @classmethod
    def from_json(cls, data):
        """Build a graph from its JSON form, renumbering edge ids to 0..E-1."""
        try:
            colors = data.get('colors')
            if colors is not None:
                colors = color_set(colors)
            ids = {}
            edges = {}
            for entry in data.get('edges', []):
                if entry['id'] in ids:
                    raise ValidationError('duplicate edge id {0!r}'.format(entry['id']))
                if colors is not None and entry['color'] not in colors:
                    raise ValidationError('edge {0!r} has unknown color {1!r}'.format(entry['id'], entry['color']))
                ids[entry['id']] = len(ids)
                edges[ids[entry['id']]] = entry['color']

            def edge(e):
                if e not in ids:
                    raise ValidationError('reference to unknown edge {0!r}'.format(e))
                return ids[e]

            vertices = [([edge(e) for e in v.get('inputs', [])], [edge(e) for e in v.get('outputs', [])])
                        for v in data.get('vertices', [])]
            return cls(vertices, edges,
                       [edge(e) for e in data.get('graph_inputs', [])],
                       [edge(e) for e in data.get('graph_outputs', [])])
        except (KeyError, TypeError, AttributeError) as e:
            raise ValidationError('malformed graph JSON: {0!r}'.format(e))


def validate(g, colors=None):
    """Return a list of every violated graph invariant; empty iff g is valid."""
    problems = []
    source_count = {}
    target_count = {}
    for v, (ins, outs) in enumerate(g.vertices):
        for side, ports, count in (('input', ins, target_count), ('output', outs, source_count)):
            for port, e in enumerate(ports):
                if e not in g.edges:
                    problems.append('vertex {0} {1} port {2}: unknown edge {3!r}'.format(v, side, port, e))
                    continue
                count[e] = count.get(e, 0) + 1
    for e in sorted(g.edges):
        if source_count.get(e, 0) > 1:
            problems.append('edge {0} has {1} source ends attached'.format(e, source_count[e]))
        if target_count.get(e, 0) > 1:
            problems.append('edge {0} has {1} target ends attached'.format(e, target_count[e]))
        if colors is not None and g.edges[e] not in colors:
            problems.append('edge {0} has unknown color {1!r}'.format(e, g.edges[e]))

    for name, legs, attached in (('graph_inputs', g.graph_inputs, source_count),
                                 ('graph_outputs', g.graph_outputs, target_count)):
        expected = set(e for e in g.edges if e not in attached)
        seen = set()
        for e in legs:
            if e not in g.edges:
                problems.append('{0} lists unknown edge {1!r}'.format(name, e))
            elif e in seen:
                problems.append('{0} lists edge {1} twice'.format(name, e))
            elif e not in expected:
                problems.append('{0} lists attached edge {1}'.format(name, e))
            seen.add(e)
        for e in sorted(expected - seen):
            problems.append('{0} omits dangling edge {1}'.format(name, e))

    if not problems:
        cycle = find_wheel(g)
        if cycle is not None:
            problems.append('wheel: directed cycle through vertices {0}'.format(cycle))
    return problems


def check(g, colors=None):
    problems = validate(g, colors)
    if problems:
        raise ValidationError('invalid graph', problems)
    return g


def vertex_digraph(g):
    """Directed graph on vertex indices with one arc per internal edge."""
    dg = nx.DiGraph()
    dg.add_nodes_from(range(len(g.vertices)))
    sources, targets = g.ends()
    for e in g.edges:
        if e in sources and e in targets:
            dg.add_edge(sources[e][0], targets[e][0])
    return dg


def find_wheel(g):
    dg = vertex_digraph(g)
    if nx.is_directed_acyclic_graph(dg):
        return None
    return [u for u, _ in nx.find_cycle(dg)]


def incidence_graph(g):
    """Undirected multigraph with a node per vertex and per edge, linked at each port."""
    ig = nx.MultiGraph()
    ig.add_nodes_from(('v', v) for v in range(len(g.vertices)))
    ig.add_nodes_from(('e', e) for e in g.edges)
    for v, (ins, outs) in enumerate(g.vertices):
        for e in ins + outs:
            ig.add_edge(('v', v), ('e', e))
    return ig


def components(g):
    """Connected components as (sorted vertices, sorted edges), isolated edges included."""
    out = []
    for nodes in nx.connected_components(incidence_graph(g)):
        vs = sorted(i for kind, i in nodes if kind == 'v')
        es = sorted(i for kind, i in nodes if kind == 'e')
        out.append((vs, es))
    return sorted(out)


def betti(g):
    """(β0, β1): rank of reduced H0 and the cycle rank of the incidence graph.

    The cycle rank counts links minus nodes plus components, so legs and
    isolated edges contribute nothing. The empty graph gets (0, 0).
    """
    ig = incidence_graph(g)
    count = nx.number_connected_components(ig)
    return (max(count - 1, 0), ig.number_of_edges() - ig.number_of_nodes() + count)


def is_connected(g):
    return nx.number_connected_components(incidence_graph(g)) == 1


def is_simply_connected(g):
    return is_connected(g) and betti(g)[1] == 0


_SCHEME_NAMES = {
    'prop': 'prop', 'gr': 'prop', 'Gr↑': 'prop',
    'properad': 'properad', 'c': 'properad', 'Gr↑_c': 'properad',
    'dioperad': 'dioperad', 'di': 'dioperad', 'Gr↑_di': 'dioperad',
}
_SCHEME_RANK = {'dioperad': 0, 'properad': 1, 'prop': 2}


class Scheme(Enum):
    """Pasting schemes: all, connected and simply connected wheel-free graphs."""
    DIOPERAD = 'dioperad'
    PROPERAD = 'properad'
    PROP = 'prop'

    @classmethod
    def parse(cls, name):
        if isinstance(name, Scheme):
            return name
        try:
            return cls(_SCHEME_NAMES[name])
        except KeyError:
            raise ValidationError('unknown scheme {0!r}'.format(name))

    def contains(self, g, checked=False):
        if not checked and validate(g):
            return False
        if self is Scheme.PROP:
            return True
        if self is Scheme.PROPERAD:
            return is_connected(g)
        return is_simply_connected(g)

    def __le__(self, other):
        return _SCHEME_RANK[self.value] <= _SCHEME_RANK[other.value]

    def __lt__(self, other):
        return _SCHEME_RANK[self.value] < _SCHEME_RANK[other.value]


def make_corolla(bp):
    bp = Biprofile.parse(bp)
    n = len(bp.inputs)
    edges = dict(enumerate(bp.inputs + bp.outputs))
    ins = tuple(range(n))
    outs = tuple(range(n, n + len(bp.outputs)))
    return ColoredGraph([(ins, outs)], edges, ins, outs)


def make_edge(color):
    return ColoredGraph([], {0: color}, (0,), (0,))


def make_chain(length, color='c'):
    """length (1;1)-vertices in a row; length 0 is the edge graph."""
    edges = dict((e, color) for e in range(length + 1))
    vertices = [((v,), (v + 1,)) for v in range(length)]
    return ColoredGraph(vertices, edges, (0,), (length,))


def disjoint_union(*graphs):
    vertices = []
    edges = {}
    graph_inputs = []
    graph_outputs = []
    offset = 0
    for g in graphs:
        shift = dict((e, offset + i) for i, e in enumerate(sorted(g.edges)))
        for e, color in g.edges.items():
            edges[shift[e]] = color
        vertices.extend(([shift[e] for e in ins], [shift[e] for e in outs]) for ins, outs in g.vertices)
        graph_inputs.extend(shift[e] for e in g.graph_inputs)
        graph_outputs.extend(shift[e] for e in g.graph_outputs)
        offset += len(g.edges)
    return ColoredGraph(vertices, edges, graph_inputs, graph_outputs)


def renumber(g, vertex_order, edge_order):
    """New vertex i is old vertex_order[i]; new edge j is old edge_order[j]."""
    enew = dict((e, j) for j, e in enumerate(edge_order))
    vertices = [([enew[e] for e in g.vertices[v][0]], [enew[e] for e in g.vertices[v][1]]) for v in vertex_order]
    edges = dict((enew[e], g.edges[e]) for e in edge_order)
    return ColoredGraph(vertices, edges, [enew[e] for e in g.graph_inputs], [enew[e] for e in g.graph_outputs])


def relabel(g, vertex_perm, edge_perm):
    """Apply old -> new maps: vertex_perm is a sequence, edge_perm a dict."""
    vertex_order = [None] * len(g.vertices)
    for old, new in enumerate(vertex_perm):
        vertex_order[new] = old
    edges = dict((edge_perm[e], c) for e, c in g.edges.items())
    vertices = [([edge_perm[e] for e in g.vertices[v][0]], [edge_perm[e] for e in g.vertices[v][1]])
                for v in vertex_order]
    return ColoredGraph(vertices, edges, [edge_perm[e] for e in g.graph_inputs],
                        [edge_perm[e] for e in g.graph_outputs])


def recolor(g, color_map):
    """The same graph with every edge color c replaced by color_map[c]."""
    return ColoredGraph(g.vertices, dict((e, color_map[c]) for e, c in g.edges.items()),
                        g.graph_inputs, g.graph_outputs)


def has_legless_component(g):
    """True if a component with a vertex touches no leg; only such graphs have strict automorphisms."""
    legs = set(g.graph_inputs) | set(g.graph_outputs)
    return any(vs and not legs.intersection(es) for vs, es in components(g))


def insert_vertex(g, e):
    """Put a new (c;c)-vertex on edge e; returns (graph, new vertex index)."""
    color = g.edges[e]
    fresh = max(g.edges) + 1
    edges = dict(g.edges)
    edges[fresh] = color
    vertices = [list(map(list, v)) for v in g.vertices]
    _, targets = g.ends()
    if e in targets:
        w, port = targets[e]
        vertices[w][0][port] = fresh
    graph_outputs = [fresh if x == e else x for x in g.graph_outputs]
    vertices.append([[e], [fresh]])
    return ColoredGraph(vertices, edges, g.graph_inputs, graph_outputs), len(g.vertices)


def remove_vertex(g, v):
    """Delete a (c;c)-vertex, joining its two edges; returns the new graph."""
    ins, outs = g.vertices[v]
    if len(ins) != 1 or len(outs) != 1 or g.edges[ins[0]] != g.edges[outs[0]]:
        raise ProfileError('vertex {0} has profile {1}, not (c;c)'.format(v, g.vertex_profile(v)))
    a, b = ins[0], outs[0]
    edges = dict(g.edges)
    del edges[b]

    def keep(e):
        return a if e == b else e

    vertices = [([keep(e) for e in vi], [keep(e) for e in vo]) for w, (vi, vo) in enumerate(g.vertices) if w != v]
    return ColoredGraph(vertices, edges, g.graph_inputs, [keep(e) for e in g.graph_outputs])


def attach_vertex(bp, side, index, color):
    """Corolla of bp (vertex 0) with a (1;1)-vertex (vertex 1) on one leg.

    side 'input': the new vertex has profile (color; bp.inputs[index]) and
    feeds that input. side 'output': it has profile (bp.outputs[index]; color).
    """
    g = make_corolla(bp)
    n = len(bp.inputs)
    fresh = n + len(bp.outputs)
    edges = dict(g.edges)
    edges[fresh] = color
    graph_inputs = list(g.graph_inputs)
    graph_outputs = list(g.graph_outputs)
    if side == 'input':
        graph_inputs[index] = fresh
        extra = ((fresh,), (index,))
    elif side == 'output':
        graph_outputs[index] = fresh
        extra = ((n + index,), (fresh,))
    else:
        raise ValueError(side)
    return ColoredGraph(list(g.vertices) + [extra], edges, graph_inputs, graph_outputs)


GraphIso = namedtuple('GraphIso', 'vertex_map edge_map flavor')


def _matcher_graph(g, strict):
    dg = nx.DiGraph()
    in_pos = dict((e, i) for i, e in enumerate(g.graph_inputs))
    out_pos = dict((e, i) for i, e in enumerate(g.graph_outputs))
    for v in range(len(g.vertices)):
        dg.add_node(('v', v), label='v')
    for e, color in g.edges.items():
        if strict:
            label = ('e', color, in_pos.get(e), out_pos.get(e))
        else:
            label = ('e', color, e in in_pos, e in out_pos)
        dg.add_node(('e', e), label=label)
    for v, (ins, outs) in enumerate(g.vertices):
        for port, e in enumerate(ins):
            dg.add_edge(('e', e), ('v', v), port=port if strict else None)
        for port, e in enumerate(outs):
            dg.add_edge(('v', v), ('e', e), port=port if strict else None)
    return dg


def find_iso(g1, g2, flavor='strict', bound=DEFAULT_ISO_BOUND):
    """Return a GraphIso g1 -> g2 of the given flavor, or None."""
    if flavor not in ('strict', 'weak'):
        raise ValueError(flavor)
    if max(len(g1.vertices), len(g2.vertices)) > bound:
        raise BoundError('isomorphism search is bounded to {0} vertices'.format(bound))
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None
    strict = flavor == 'strict'
    matcher = isomorphism.DiGraphMatcher(
        _matcher_graph(g1, strict), _matcher_graph(g2, strict),
        node_match=isomorphism.categorical_node_match('label', None),
        edge_match=isomorphism.categorical_edge_match('port', None))
    for mapping in matcher.isomorphisms_iter():
        vertex_map = tuple(mapping[('v', v)][1] for v in range(len(g1.vertices)))
        edge_map = dict((e, mapping[('e', e)][1]) for e in g1.edges)
        return GraphIso(vertex_map, edge_map, flavor)
    return None


class CanonicalCode(bytes):
    """Compact JSON of the canonical representative of a strict-iso class."""

    def payload(self):
        return json.loads(self.decode('utf-8'))

    def graph(self):
        return ColoredGraph.from_json(self.payload())

    def labels(self):
        payload = self.payload()
        if 'labels' not in payload:
            return None
        return tuple(freeze(label) for label in payload['labels'])

    def __str__(self):
        return self.decode('utf-8')


def freeze(x):
    """JSON lists back to tuples, recursively."""
    if isinstance(x, list):
        return tuple(freeze(y) for y in x)
    return x


def _traverse(g, start, sources, targets):
    vorder = [start]
    seen_v = set([start])
    eorder = []
    seen_e = set()
    i = 0
    while i < len(vorder):
        ins, outs = g.vertices[vorder[i]]
        i += 1
        for e in ins + outs:
            if e not in seen_e:
                seen_e.add(e)
                eorder.append(e)
            for end in (sources.get(e), targets.get(e)):
                if end is not None and end[0] not in seen_v:
                    seen_v.add(end[0])
                    vorder.append(end[0])
    return vorder, eorder


def _encode(g, vorder, eorder, labels, in_pos, out_pos):
    number = dict((e, i) for i, e in enumerate(eorder))
    vpart = tuple((tuple(number[e] for e in g.vertices[v][0]),
                   tuple(number[e] for e in g.vertices[v][1]),
                   sort_key(labels[v])) for v in vorder)
    epart = tuple((sort_key(g.edges[e]), in_pos.get(e, -1), out_pos.get(e, -1)) for e in eorder)
    return (vpart, epart)


def canonical_labeling(g, labels=None, bound=DEFAULT_ISO_BOUND):
    """Return (code, vertex_order, edge_order) for g, optionally vertex-labelled.

    Within a component a start vertex fixes every other vertex and edge,
    because strict isomorphisms preserve port order. Each component takes
    its least traversal code; components are then sorted.
    """
    if len(g.vertices) > bound:
        raise BoundError('canonical form is bounded to {0} vertices'.format(bound))
    if labels is None:
        labels = (None,) * len(g.vertices)
    sources, targets = g.ends()
    in_pos = dict((e, i) for i, e in enumerate(g.graph_inputs))
    out_pos = dict((e, i) for i, e in enumerate(g.graph_outputs))
    encoded = []
    for vs, es in components(g):
        if not vs:
            encoded.append((_encode(g, [], es, labels, in_pos, out_pos), [], es))
            continue
        best = None
        for start in vs:
            vorder, eorder = _traverse(g, start, sources, targets)
            code = _encode(g, vorder, eorder, labels, in_pos, out_pos)
            if best is None or code < best[0]:
                best = (code, vorder, eorder)
        encoded.append(best)
    encoded.sort(key=lambda item: item[0])
    vertex_order = [v for _, vorder, _ in encoded for v in vorder]
    edge_order = [e for _, _, eorder in encoded for e in eorder]
    payload = renumber(g, vertex_order, edge_order).to_json()
    if any(label is not None for label in labels):
        payload['labels'] = [labels[v] for v in vertex_order]
    code = CanonicalCode(json.dumps(payload, sort_keys=True, separators=(',', ':')).encode('utf-8'))
    return code, tuple(vertex_order), tuple(edge_order)


def canonical_form(g, bound=DEFAULT_ISO_BOUND):
    return canonical_labeling(g, None, bound)[0]


def decorated_form(g, labels, bound=DEFAULT_ISO_BOUND):
    """Canonical code of a vertex-labelled graph; labels must be JSON-able."""
    return canonical_labeling(g, tuple(labels), bound)[0]


def _profile_list(colors, vertex_arity_bound, vertex_profiles):
    if vertex_profiles is not None:
        return sorted(set(Biprofile.parse(p) for p in vertex_profiles),
                      key=lambda bp: (bp.size, len(bp.inputs), bp))
    if isinstance(vertex_arity_bound, int):
        vertex_arity_bound = (vertex_arity_bound, vertex_arity_bound)
    return biprofiles(colors, vertex_arity_bound[0], vertex_arity_bound[1])


def _select(open_edges, edges, colors, start=0, used=()):
    """Ordered choices of distinct open edges whose colors match colors."""
    if start == len(colors):
        yield used
        return
    for e in open_edges:
        if e not in used and edges[e] == colors[start]:
            for rest in _select(open_edges, edges, colors, start + 1, used + (e,)):
                yield rest


def _grow(bp, profiles, max_vertices, edges, vertices, open_edges, last, found):
    if len(open_edges) == len(bp.outputs):
        for graph_outputs in _select(open_edges, edges, bp.outputs):
            found.append(ColoredGraph(vertices, edges, range(len(bp.inputs)), graph_outputs))
    if len(vertices) == max_vertices:
        return
    for index, profile in enumerate(profiles):
        for chosen in _select(open_edges, edges, profile.inputs):
            # Adjacent independent vertices are only generated in profile order.
            if last is not None and index < last[0] and not set(chosen) & set(last[1]):
                continue
            new_edges = dict(edges)
            outs = tuple(range(len(edges), len(edges) + len(profile.outputs)))
            for e, color in zip(outs, profile.outputs):
                new_edges[e] = color
            remaining = [e for e in open_edges if e not in chosen] + list(outs)
            _grow(bp, profiles, max_vertices, new_edges, vertices + [(chosen, outs)],
                  remaining, (index, outs), found)


def enumerate_graphs(scheme, colors, bp, max_vertices, vertex_arity_bound=(1, 1),
                     vertex_profiles=None, bound=DEFAULT_ISO_BOUND):
    """One canonical code per strict-iso class of scheme graphs with biprofile bp.

    Vertices are built in a topological order, so every generated graph is
    wheel-free. Results are sorted by vertex count, then code.
    """
    scheme = Scheme.parse(scheme)
    bp = Biprofile.parse(bp)
    profiles = _profile_list(color_set(colors), vertex_arity_bound, vertex_profiles)
    found = []
    edges = dict(enumerate(bp.inputs))
    _grow(bp, profiles, max_vertices, edges, [], list(range(len(bp.inputs))), None, found)
    codes = {}
    for g in found:
        if scheme.contains(g, checked=True):
            codes.setdefault(canonical_form(g, bound), len(g.vertices))
    return sorted(codes, key=lambda code: (codes[code], code))


def enumerate_graph_objects(scheme, colors, bp, max_vertices, vertex_arity_bound=(1, 1),
                            vertex_profiles=None, bound=DEFAULT_ISO_BOUND):
    """As enumerate_graphs, decoded to ColoredGraph values."""
    return [code.graph() for code in enumerate_graphs(scheme, colors, bp, max_vertices, vertex_arity_bound,
                                                        vertex_profiles, bound)]
