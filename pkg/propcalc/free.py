"""Free Gr-props, extension categories and truncated left adjoints.

Everything here is truncated: graphs are enumerated up to a vertex bound
N and every result records the N it was computed at.
"""
from collections import namedtuple
import itertools
import random

from propcalc import ssets
from propcalc.categories import essential_surjectivity_witness, is_isofibration
from propcalc.common import (BoundError, Bounds, SchemeError, UnionFind, ValidationError, report, sample_product,
                             sort_key)
from propcalc.common.decorators import memoize
from propcalc.graphs import (Biprofile, CanonicalCode, Scheme, betti, biprofiles, canonical_form, canonical_labeling,
                             decorated_form, enumerate_graph_objects, enumerate_graphs, find_iso,
                             has_legless_component, make_corolla, make_edge, recolor, remove_vertex)
from propcalc.properads import Composer, GrProp, PropMorphism, UnderlyingCategory, constant, pi0_category, pi0_functor
from propcalc.ssets import FinSimplicialSet, Simplex, normalize, simplex_dim
from propcalc.substitution import (SubstitutionData, collapse_moves, collapsed_labels, compose_substitution_data,
                                   corolla_data, graft, piece_labels, substitute)


SchemePair = namedtuple('SchemePair', 'inner outer tag')

DI_C = SchemePair(Scheme.DIOPERAD, Scheme.PROPERAD, 'beta1')
C_PROP = SchemePair(Scheme.PROPERAD, Scheme.PROP, 'beta0')

_PAIR_NAMES = {'di-c': DI_C, 'di->c': DI_C, 'L1': DI_C, 'c-prop': C_PROP, 'c->prop': C_PROP, 'L0': C_PROP}


def parse_pair(name):
    if isinstance(name, SchemePair):
        return name
    try:
        return _PAIR_NAMES[name]
    except KeyError:
        raise ValidationError('unknown scheme pair {0!r}; use di-c or c-prop'.format(name))


def pair_name(pair):
    return 'di-c' if pair.tag == 'beta1' else 'c-prop'


def beta_tilde(graph, pair):
    """β1 for the di→c pair, β0 for c→prop; None for the empty graph."""
    if not graph.vertices and not graph.edges:
        return None
    b0, b1 = betti(graph)
    return b1 if pair.tag == 'beta1' else b0


class FreeComposer(Composer):
    """Formal composites: an entry is the coproduct over rigid scheme graphs of the products of generators.

    Cells are (canonical code, product cell); the product runs over the
    vertices of the canonical representative in order.
    """
    kind = 'free'

    def __init__(self, generators, max_vertices):
        self.generators = dict((Biprofile.parse(bp), X) for bp, X in generators.items())
        self.max_vertices = max_vertices

    def entry(self, prop, bp):
        cells = {}
        faces = {}
        profiles = sorted(self.generators)
        for code in enumerate_graphs(prop.scheme, prop.colors, bp, self.max_vertices, vertex_profiles=profiles):
            graph = code.graph()
            if has_legless_component(graph):
                raise ValidationError('free entry {0} contains a graph without legs; it is not rigid'.format(bp))
            X = ssets.product(*[self.generators[graph.vertex_profile(v)] for v in range(len(graph.vertices))])
            key = str(code)
            for cell, k in X.dims.items():
                cells[(key, cell)] = k
                faces[(key, cell)] = [Simplex((key, f.cell), f.surj) for f in X.faces[cell]]
        return FinSimplicialSet(cells, faces, 'F({0})'.format(bp))

    def unit(self, prop, color):
        return (str(canonical_form(make_edge(color))), ())

    @memoize
    def graph(self, key):
        return CanonicalCode(key.encode('utf-8')).graph()

    def compose(self, prop, graph, labels, degree):
        pieces = []
        decorations = []
        for s in labels:
            key, cell = s.cell
            pieces.append(self.graph(key))
            for t in cell:
                decorations.append(Simplex(t.cell, tuple(t.surj[x] for x in s.surj)))
        result = substitute(SubstitutionData(graph, tuple(pieces)))
        if len(result.vertices) > self.max_vertices:
            raise BoundError('the composite has {0} vertices, more than {1}'.format(
                len(result.vertices), self.max_vertices))
        code, vertex_order, _ = canonical_labeling(result)
        if not vertex_order:
            return Simplex((str(code), ()), (0,) * (degree + 1))
        reduced = normalize(tuple(decorations[v] for v in vertex_order))
        return Simplex((str(code), reduced.cell), reduced.surj)

    def to_json(self):
        return {'generators': [{'biprofile': str(bp), 'sset': X.to_json()} for bp, X in sorted(self.generators.items())],
                'max_vertices': self.max_vertices}


def free_prop(scheme, colors, generators, arity_bound=4, dim_bound=3, max_vertices=3, name='free'):
    """The free Gr-prop on generators {biprofile: FinSimplicialSet}, truncated at max_vertices."""
    return GrProp(scheme, colors, FreeComposer(generators, max_vertices), arity_bound, dim_bound, name)


def free_prop_from_json(data):
    try:
        generators = dict((item['biprofile'], FinSimplicialSet.from_json(item['sset'])) for item in data['generators'])
        return free_prop(data.get('scheme', 'properad'), data['colors'], generators, data.get('arity_bound', 4),
                         data.get('dim_bound', 3), data.get('max_vertices', 3), data.get('name', 'free'))
    except (KeyError, TypeError) as e:
        raise ValidationError('malformed free prop JSON: {0!r}'.format(e))


def gnm_colors(n, m):
    return (tuple('c{0}'.format(i + 1) for i in range(n)), tuple('d{0}'.format(j + 1) for j in range(m)))


def materialize_Gnm(n, m, X, scheme=Scheme.PROPERAD, dim_bound=3, N=2):
    """𝒢_{n,m}[X]: one generator family X in the entry (c1..cn; d1..dm) on n+m distinct colors."""
    if n + m < 1:
        raise ValidationError('𝒢_{n,m} needs n + m >= 1')
    ins, outs = gnm_colors(n, m)
    bp = Biprofile(ins, outs)
    return free_prop(scheme, ins + outs, {bp: X}, max(n + m, 2), dim_bound, N,
                     '𝒢_{{{0},{1}}}[{2}]'.format(n, m, X.name))


FreeHom = namedtuple('FreeHom', 'color_map generator_maps')


def homs(G, P, budget=None):
    """Every morphism from a free prop G to P, as FreeHom values.

    A morphism is a color map together with one simplicial map per generator.
    """
    generators = sorted(G.composer.generators.items())
    out = []
    for images in itertools.product(P.colors, repeat=len(G.colors)):
        color_map = dict(zip(G.colors, images))
        options = []
        for bp, X in generators:
            target_bp = bp.map(color_map)
            if target_bp.size > P.arity_bound:
                raise BoundError('{0} lies outside the arity bound of {1}'.format(target_bp, P.name))
            options.append(ssets.maps(X, P.entry(target_bp), budget=budget))
        for chosen in itertools.product(*options):
            out.append(FreeHom(color_map, dict((bp, m) for (bp, _), m in zip(generators, chosen))))
    return out


def extend_hom(G, P, hom):
    """The PropMorphism G -> P determined by a FreeHom: γ_P of the images of the generators."""
    def rule(bp, X, Y):
        assignment = {}
        for (key, cell), k in X.dims.items():
            graph = G.composer.graph(key)
            labels = [hom.generator_maps[graph.vertex_profile(v)](t) for v, t in enumerate(cell)]
            assignment[(key, cell)] = P.gamma(recolor(graph, hom.color_map), labels, k)
        return assignment
    return PropMorphism(G, P, hom.color_map, rule=rule)


def _hom_key(hom):
    maps = tuple(sorted((str(bp), tuple(sorted(m.assignment.items(), key=sort_key)))
                        for bp, m in hom.generator_maps.items()))
    return (tuple(sorted(hom.color_map.items())), maps)


def gnm_hom_check(n, m, X, P, N=1, verify_extensions=True):
    """Hom(𝒢_{n,m}[X], P) against pairs (biprofile of arity (n,m), map X -> P(biprofile))."""
    G = materialize_Gnm(n, m, X, P.scheme, N=N)
    ins, outs = gnm_colors(n, m)
    expected = set()
    for bp in biprofiles(P.colors, n, m):
        if bp.arity != (n, m):
            continue
        gen = Biprofile(ins, outs)
        color_map = dict(zip(ins + outs, bp.inputs + bp.outputs))
        for f in ssets.maps(X, P.entry(bp)):
            expected.add(_hom_key(FreeHom(color_map, {gen: f})))
    found = homs(G, P)
    keys = [_hom_key(h) for h in found]
    violations = []
    if len(set(keys)) != len(keys):
        violations.append({'law': 'distinct', 'homs': len(keys), 'distinct': len(set(keys))})
    if set(keys) != expected:
        violations.append({'law': 'bijection', 'homs': len(set(keys)), 'expected': len(expected)})
    checked = len(keys)
    if verify_extensions:
        for hom in found:
            checked += 1
            result = extend_hom(G, P, hom).check(Bounds(vertices=N))
            if result['violations']:
                violations.append({'law': 'extension', 'color_map': hom.color_map,
                                   'problems': result['violations'][:3]})
    return report(checked, violations, n=n, m=m, X=X.name, prop=P.name, homs=len(keys))


def _default_profiles(colors, vertex_arity_bound):
    return [bp for bp in biprofiles(colors, vertex_arity_bound[0], vertex_arity_bound[1]) if bp.size]


def extension_objects(pair, colors, bp, N, vertex_arity_bound=(1, 1), vertex_profiles=None):
    """Outer-scheme graphs of biprofile bp on at most N vertices, as canonical codes.

    Vertex profiles default to every nonempty biprofile within vertex_arity_bound.
    """
    pair = parse_pair(pair)
    if vertex_profiles is None:
        vertex_profiles = _default_profiles(colors, vertex_arity_bound)
    return enumerate_graphs(pair.outer, colors, bp, N, vertex_profiles=vertex_profiles)


def _data_key(d):
    return tuple(canonical_form(piece) for piece in d.assignment)


def extension_morphisms(K, G, pair):
    """Every substitution datum on G with inner-scheme pieces whose result is strictly iso to K."""
    pair = parse_pair(pair)
    colors = sorted(set(K.edges.values()) | set(G.edges.values()))
    profiles = sorted(set(K.vertex_profile(v) for v in range(len(K.vertices))))
    size = len(K.vertices)
    library = []
    for v in range(len(G.vertices)):
        library.append(enumerate_graph_objects(pair.inner, colors, G.vertex_profile(v), size,
                                               vertex_profiles=profiles))
    out = []
    for assignment in itertools.product(*library):
        if sum(len(piece.vertices) for piece in assignment) != size:
            continue
        d = SubstitutionData(G, assignment)
        if find_iso(substitute(d), K, 'strict') is not None:
            out.append(d)
    return out


def extension_laws_check(pair, colors, bp, N, vertex_arity_bound=(1, 1)):
    """Identities and associativity of composition in the truncated extension category."""
    pair = parse_pair(pair)
    objects = [code.graph() for code in extension_objects(pair, colors, bp, N, vertex_arity_bound)]
    arrows = {}
    for i, K in enumerate(objects):
        for j, G in enumerate(objects):
            if len(G.vertices) <= len(K.vertices):
                arrows[(i, j)] = extension_morphisms(K, G, pair)
    checked = 0
    violations = []
    for (i, j), data in arrows.items():
        keys = set(_data_key(d) for d in data)
        if i == j:
            checked += 1
            if _data_key(corolla_data(objects[i])) not in keys:
                violations.append({'law': 'identity', 'object': str(canonical_form(objects[i]))})
        for d in data:
            checked += 2
            left = compose_substitution_data(d, corolla_data(objects[j]))
            right = compose_substitution_data(corolla_data(objects[i]), d)
            if _data_key(left) != _data_key(d) or _data_key(right) != _data_key(d):
                violations.append({'law': 'unit', 'object': str(canonical_form(objects[i]))})
            for k in range(len(objects)):
                if (j, k) not in arrows:
                    continue
                for e in arrows[(j, k)]:
                    checked += 1
                    composite = compose_substitution_data(d, e)
                    if _data_key(composite) not in set(_data_key(x) for x in arrows.get((i, k), ())):
                        violations.append({'law': 'closure', 'from': str(canonical_form(objects[i])),
                                           'to': str(canonical_form(objects[k]))})
                        continue
                    for l in range(len(objects)):
                        for h in arrows.get((k, l), ()):
                            checked += 1
                            one = compose_substitution_data(composite, h)
                            two = compose_substitution_data(d, compose_substitution_data(e, h))
                            if _data_key(one) != _data_key(two):
                                violations.append({'law': 'associativity',
                                                   'from': str(canonical_form(objects[i])),
                                                   'to': str(canonical_form(objects[l]))})
    return report(checked, violations, objects=len(objects))


class FreeEntry(object):
    """Classes of decorated graphs for one entry of a truncated left adjoint.

    Each class has an id, a β̃ label and a representative: a member with
    fewest vertices, least decorated code among those. Classes are ordered
    by β̃ (the empty graph last), then by representative.
    """

    def __init__(self, pair, bp, N, degree, nodes, groups):
        self.pair = pair
        self.bp = bp
        self.N = N
        self.degree = degree
        self.nodes = nodes
        self.classes = []
        self.members = {}
        self.index = {}
        self.violations = []
        ordered = []
        for members in groups:
            betas = set(beta_tilde(nodes[key][0], pair) for key in members)
            if len(betas) > 1:
                self.violations.append({'law': 'beta constant', 'representative': str(members[0]),
                                        'betas': sorted(betas, key=sort_key)})
            beta = min(betas, key=_beta_order)
            rep = min(members, key=lambda key: (len(nodes[key][0].vertices), str(key)))
            ordered.append((_beta_order(beta), str(rep), beta, rep, members))
        ordered.sort(key=lambda item: (item[0], item[1]))
        for i, (_, _, beta, rep, members) in enumerate(ordered):
            self.classes.append((i, beta, rep))
            self.members[i] = list(members)
            for key in members:
                self.index[key] = i

    def __len__(self):
        return len(self.classes)

    def class_of(self, graph, labels):
        """Class id of a decoration, or None if it was not reached at this truncation."""
        return self.index.get(decorated_form(graph, labels))

    def representative(self, i):
        return self.nodes[self.classes[i][2]]

    def beta(self, i):
        return self.classes[i][1]

    def stratum(self, beta):
        return [i for i, b, _ in self.classes if b == beta]

    def to_json(self):
        return {
            'pair': pair_name(self.pair),
            'biprofile': str(self.bp),
            'N': self.N,
            'degree': self.degree,
            'classes': [{'id': i, 'beta': beta, 'representative': str(key), 'size': len(self.members[i])}
                        for i, beta, key in self.classes],
        }


def _beta_order(beta):
    return (beta is None, beta or 0)


def _is_unit_label(P, graph, v, s):
    bp = graph.vertex_profile(v)
    if len(bp.inputs) != 1 or bp.inputs != bp.outputs:
        return False
    return s == constant(P.unit(bp.inputs[0]), simplex_dim(s))


def _allowed_profiles(P, degree, vertex_arity_bound=None):
    """Vertex profiles with a nonempty degree-n entry; arities default to P's arity bound."""
    if vertex_arity_bound is None:
        vertex_arity_bound = (P.arity_bound, P.arity_bound)
    out = []
    for bp in biprofiles(P.colors, vertex_arity_bound[0], vertex_arity_bound[1], P.arity_bound):
        if P.entry(bp).simplices(degree):
            out.append(bp)
    return out


def left_adjoint_truncated(P, pair, bp, N, degree=0, vertex_arity_bound=None, budget=None):
    """Entry bp of L P at truncation N and one simplicial degree.

    Nodes are decorated outer-scheme graphs on at most N vertices. Two nodes
    are identified when one collapses to the other by γ over an inner-scheme
    piece, or by deleting a unit-labelled vertex.
    """
    pair = parse_pair(pair)
    bp = Biprofile.parse(bp)
    if P.scheme != pair.inner:
        raise SchemeError('{0} is a {1}; the pair needs a {2}'.format(P.name, P.scheme.value, pair.inner.value))
    budget = budget if budget is not None else Bounds().budget
    profiles = _allowed_profiles(P, degree, vertex_arity_bound)
    nodes = {}
    found = UnionFind()
    pending = []

    def add(graph, labels):
        key = decorated_form(graph, labels)
        if key not in nodes:
            if len(nodes) >= budget:
                raise BoundError('more than {0} decorations at N={1}'.format(budget, N))
            nodes[key] = (graph, tuple(labels))
            found.add(key)
            pending.append(key)
        return key

    for graph in enumerate_graph_objects(pair.outer, P.colors, bp, N, vertex_profiles=profiles):
        for labels in itertools.product(*P.decorations(graph, degree)):
            add(graph, labels)
    if bp.size <= P.arity_bound:
        corolla = make_corolla(bp)
        for x in P.entry(bp).simplices(degree):
            add(corolla, (x,))

    while pending:
        key = pending.pop()
        graph, labels = nodes[key]
        for v in range(len(graph.vertices)):
            if _is_unit_label(P, graph, v, labels[v]):
                found.union(key, add(remove_vertex(graph, v), labels[:v] + labels[v + 1:]))
        if len(graph.vertices) < 2:
            continue
        for move in collapse_moves(graph, pair.inner, orderings='single'):
            try:
                value = P.gamma(move.piece, piece_labels(move, labels), degree)
            except BoundError:
                continue
            found.union(key, add(move.graph, collapsed_labels(move, labels, value)))
    return FreeEntry(pair, bp, N, degree, nodes, found.groups(key=str))


def beta_decomposition_check(P, pair, bp, N, degree=0, vertex_arity_bound=None):
    """The β̃ = 0 stratum of L P(bp) is in bijection with P(bp) through γ; β̃ is constant on classes."""
    pair = parse_pair(pair)
    bp = Biprofile.parse(bp)
    entry = left_adjoint_truncated(P, pair, bp, N, degree, vertex_arity_bound)
    checked = len(entry.classes)
    violations = list(entry.violations)
    image = {}
    for i in entry.stratum(0):
        values = set()
        for key in entry.members[i]:
            graph, labels = entry.nodes[key]
            if beta_tilde(graph, pair) != 0:
                continue
            checked += 1
            values.add(P.gamma(graph, labels, degree))
        if len(values) != 1:
            violations.append({'law': 'gamma constant', 'class': i, 'values': len(values)})
            continue
        value = values.pop()
        if value in image:
            violations.append({'law': 'injective', 'classes': [image[value], i]})
        image[value] = i
    expected = set(P.entry(bp).simplices(degree))
    if set(image) != expected:
        violations.append({'law': 'surjective', 'missing': len(expected - set(image)),
                           'extra': len(set(image) - expected)})
    return report(checked, violations, classes=len(entry), stratum=len(entry.stratum(0)), N=N)


def stratum_zero_check(P, pair, bp, N, degree=0, vertex_arity_bound=None, sample=64, seed=0):
    """beta_decomposition_check one graph at a time, without building L P(bp).

    Every move out of an undecorated outer-scheme graph keeps β̃. On every
    decorated inner-scheme graph γ agrees with γ after each of its moves,
    and γ of the corolla decorated by x is x; together these make the
    β̃ = 0 classes the simplices of P(bp). A graph with more than sample
    decorations is checked on sample seeded random ones.
    """
    pair = parse_pair(pair)
    bp = Biprofile.parse(bp)
    if P.scheme != pair.inner:
        raise SchemeError('{0} is a {1}; the pair needs a {2}'.format(P.name, P.scheme.value, pair.inner.value))
    rng = random.Random(seed)
    profiles = _allowed_profiles(P, degree, vertex_arity_bound)
    checked = 0
    violations = []
    shapes = enumerate_graph_objects(pair.outer, P.colors, bp, N, vertex_profiles=profiles)
    for graph in shapes:
        beta = beta_tilde(graph, pair)
        targets = [remove_vertex(graph, v) for v in range(len(graph.vertices)) if _is_unit_profile(graph, v)]
        targets += [move.graph for move in collapse_moves(graph, pair.inner, orderings='one')
                    if move.piece.biprofile().size <= P.arity_bound]
        for target in targets:
            checked += 1
            if beta_tilde(target, pair) != beta:
                violations.append({'law': 'beta constant', 'graph': str(canonical_form(graph)),
                                   'target': str(canonical_form(target))})
    exhaustive = 0
    image = set()
    graphs = enumerate_graph_objects(pair.inner, P.colors, bp, N, vertex_profiles=profiles)
    for graph in graphs:
        moves = list(collapse_moves(graph, pair.inner, orderings='single'))
        choices, complete = sample_product(P.decorations(graph, degree), sample, rng)
        exhaustive += int(complete)
        for labels in choices:
            value = P.gamma(graph, labels, degree)
            image.add(value)
            for target, target_labels in _decorated_moves(P, graph, labels, moves, degree):
                checked += 1
                if P.gamma(target, target_labels, degree) != value:
                    violations.append({'law': 'gamma constant', 'graph': str(decorated_form(graph, labels)),
                                       'target': str(decorated_form(target, target_labels))})
    corolla = make_corolla(bp)
    simplices = P.entry(bp).simplices(degree)
    expected = set(simplices)
    for x in simplices:
        checked += 1
        value = P.gamma(corolla, (x,), degree)
        image.add(value)
        if value != x:
            violations.append({'law': 'injective', 'simplex': str(x)})
    if image != expected:
        violations.append({'law': 'surjective', 'missing': len(expected - image), 'extra': len(image - expected)})
    return report(checked, violations, shapes=len(shapes), graphs=len(graphs), exhaustive=exhaustive, N=N)


def _is_unit_profile(graph, v):
    bp = graph.vertex_profile(v)
    return len(bp.inputs) == 1 and bp.inputs == bp.outputs


def _decorated_moves(P, graph, labels, moves, degree):
    """(graph, labels) after each unit removal and each collapse whose piece P can compose."""
    for v in range(len(graph.vertices)):
        if _is_unit_label(P, graph, v, labels[v]):
            yield remove_vertex(graph, v), labels[:v] + labels[v + 1:]
    for move in moves:
        try:
            value = P.gamma(move.piece, piece_labels(move, labels), degree)
        except BoundError:
            continue
        yield move.graph, collapsed_labels(move, labels, value)


class UnitMap(object):
    """η: P(bp) -> L P(bp), x ↦ class of the corolla decorated by x."""

    def __init__(self, P, entry):
        self.P = P
        self.entry = entry
        self.corolla = make_corolla(entry.bp)

    def __call__(self, x):
        return self.entry.class_of(self.corolla, (x,))

    def table(self):
        return dict((x, self(x)) for x in self.P.entry(self.entry.bp).simplices(self.entry.degree))

    def is_injective(self):
        table = self.table()
        return None not in table.values() and len(set(table.values())) == len(table)


def adjunction_unit(P, pair, bp, N, degree=0, vertex_arity_bound=None):
    return UnitMap(P, left_adjoint_truncated(P, pair, bp, N, degree, vertex_arity_bound))


def unit_injectivity_check(P, pair, N, vertex_arity_bound=None, profiles=None):
    """The unit is injective on every tested entry, and distinct colors have distinct unit classes."""
    pair = parse_pair(pair)
    if profiles is None:
        profiles = [bp for bp in _allowed_profiles(P, 0, vertex_arity_bound) if bp.size]
    checked = 0
    violations = []
    for bp in profiles:
        eta = adjunction_unit(P, pair, bp, N, 0, vertex_arity_bound)
        checked += 1
        if not eta.is_injective():
            violations.append({'biprofile': str(bp), 'table': len(eta.table())})
    return report(checked, violations, N=N)


def monotonicity_check(P, pair, bp, N, vertex_arity_bound=None):
    """Distinct classes at truncation N stay distinct at N + 1."""
    small = left_adjoint_truncated(P, pair, bp, N, 0, vertex_arity_bound)
    large = left_adjoint_truncated(P, pair, bp, N + 1, 0, vertex_arity_bound)
    seen = {}
    violations = []
    for i, _, key in small.classes:
        graph, labels = small.nodes[key]
        j = large.class_of(graph, labels)
        if j is None:
            violations.append({'law': 'lost', 'class': i})
        elif j in seen:
            violations.append({'law': 'merged', 'classes': [seen[j], i], 'N': N})
        else:
            seen[j] = i
    return report(len(small.classes), violations, N=N)


class TruncatedCategory(object):
    """π0 U L P at truncation N: objects are colors, arrows are degree-0 classes of (a;b) entries.

    Composites are grafts of representatives; None once a graft exceeds N.
    """

    def __init__(self, P, pair, N, vertex_arity_bound=None):
        self.P = P
        self.pair = parse_pair(pair)
        self.N = N
        self.objects = P.colors
        self.entries = {}
        for a in self.objects:
            for b in self.objects:
                self.entries[(a, b)] = left_adjoint_truncated(P, self.pair, Biprofile((a,), (b,)), N, 0,
                                                              vertex_arity_bound)

    def hom(self, a, b):
        return [i for i, _, _ in self.entries[(a, b)].classes]

    def identity(self, a):
        return self.entries[(a, a)].class_of(make_edge(a), ())

    def compose(self, g, f, a, b, c):
        first, first_labels = self.entries[(a, b)].representative(f)
        second, second_labels = self.entries[(b, c)].representative(g)
        if len(first.vertices) + len(second.vertices) > self.N:
            return None
        return self.entries[(a, c)].class_of(graft(first, second), first_labels + second_labels)

    def beta(self, a, b, f):
        return self.entries[(a, b)].beta(f)

    def isomorphisms(self):
        """(a, b, f, g) with g ∘ f and f ∘ g identities, where both composites are computable."""
        out = []
        for a in self.objects:
            for b in self.objects:
                for f in self.hom(a, b):
                    for g in self.hom(b, a):
                        if self.compose(g, f, a, b, a) == self.identity(a) and \
                                self.compose(f, g, b, a, b) == self.identity(b):
                            out.append((a, b, f, g))
        return out


def well_behaved_check(pair, P, N, vertex_arity_bound=None):
    """The unit P -> L P is the identity on colors and bijective on π0 isomorphisms; β̃ adds under grafting."""
    pair = parse_pair(pair)
    L = TruncatedCategory(P, pair, N, vertex_arity_bound)
    view = UnderlyingCategory(P)
    C = pi0_category(view)
    checked = 1
    violations = []
    if tuple(L.objects) != tuple(C.objects):
        violations.append({'law': 'colors'})
    unit_of = {}
    for f in C.isomorphisms():
        a, b, cell = f
        checked += 1
        image = L.entries[(a, b)].class_of(make_corolla(Biprofile((a,), (b,))), (constant(cell, 0),))
        if image is None:
            violations.append({'law': 'unit undefined', 'morphism': list(f)})
        unit_of[(a, b, image)] = f
    for a, b, f, g in L.isomorphisms():
        checked += 1
        if L.beta(a, b, f) != 0 or L.beta(b, a, g) != 0:
            violations.append({'law': 'iso beta', 'objects': [a, b], 'betas': [L.beta(a, b, f), L.beta(b, a, g)]})
        if (a, b, f) not in unit_of:
            violations.append({'law': 'iso not in image', 'objects': [a, b], 'class': f})
    iso_count = len(L.isomorphisms())
    if iso_count != len(unit_of):
        violations.append({'law': 'iso bijection', 'L': iso_count, 'P': len(unit_of)})
    for a, b, c in itertools.product(L.objects, repeat=3):
        for f in L.hom(a, b):
            for g in L.hom(b, c):
                composite = L.compose(g, f, a, b, c)
                if composite is None:
                    continue
                checked += 1
                if L.beta(a, c, composite) != L.beta(a, b, f) + L.beta(b, c, g):
                    violations.append({'law': 'graft additivity', 'objects': [a, b, c], 'classes': [f, g]})
    return report(checked, violations, N=N, isomorphisms=iso_count)


def _image_class(f, L_source, L_target, a, b, i):
    graph, labels = L_source.entries[(a, b)].representative(i)
    mapped = tuple(f(graph.vertex_profile(v), s) for v, s in enumerate(labels))
    return L_target.entries[(f.color_map[a], f.color_map[b])].class_of(recolor(graph, f.color_map), mapped)


def transfer_check(f, pair, N, vertex_arity_bound=None):
    """If π0 U L f is essentially surjective or an isofibration on isomorphisms, so is π0 U f."""
    pair = parse_pair(pair)
    LP = TruncatedCategory(f.source, pair, N, vertex_arity_bound)
    LQ = TruncatedCategory(f.target, pair, N, vertex_arity_bound)
    source_isos = LP.isomorphisms()
    target_isos = LQ.isomorphisms()
    images = set(f.color_map.values())
    essential = all(d in images or any(a in images and b == d for a, b, _, _ in target_isos) for d in LQ.objects)
    lifted = set()
    for a, b, i, _ in source_isos:
        lifted.add((a, f.color_map[b], _image_class(f, LP, LQ, a, b, i)))
    isofibration = True
    for e in LP.objects:
        for a, b, h, _ in target_isos:
            if a == f.color_map[e] and (e, b, h) not in lifted:
                isofibration = False
    F = pi0_functor(f)
    checked = 2
    violations = []
    if essential and essential_surjectivity_witness(F) is not None:
        violations.append({'law': 'essential surjectivity', 'witness': essential_surjectivity_witness(F)})
    if isofibration and not is_isofibration(F):
        violations.append({'law': 'isofibration'})
    return report(checked, violations, N=N, L_essential=essential, L_isofibration=isofibration)


def free_entry_table(P, pair, bp, N, degree=0, vertex_arity_bound=None):
    """JSON for the free subcommand."""
    return left_adjoint_truncated(P, pair, bp, N, degree, vertex_arity_bound).to_json()


def formal_composite_check(G, graphs, sample=None):
    """γ of a free prop returns the class of the decorated graph itself.

    Composites beyond the truncation of G are skipped.
    """
    checked = 0
    skipped = 0
    violations = []
    for graph in graphs:
        for labels in itertools.product(*G.decorations(graph, 0)):
            try:
                value = G.gamma(graph, labels)
            except BoundError:
                skipped += 1
                continue
            checked += 1
            key, cell = value.cell
            pieces = [G.composer.graph(s.cell[0]) for s in labels]
            expected = canonical_form(substitute(SubstitutionData(graph, tuple(pieces))))
            if key != str(expected) or len(cell) != sum(len(s.cell[1]) for s in labels):
                violations.append({'graph': str(canonical_form(graph)), 'value': key})
            if sample is not None and checked >= sample:
                return report(checked, violations, skipped=skipped)
    return report(checked, violations, skipped=skipped)

