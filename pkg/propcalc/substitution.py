"""Graph substitution G{H_v}, grafting and pasting-scheme checks."""
from collections import namedtuple
import itertools
import random

import networkx as nx
from sympy.utilities.iterables import multiset_partitions

from propcalc.common import IsoError, ProfileError, UnionFind, report, sample_product
from propcalc.graphs import (Biprofile, ColoredGraph, Scheme, betti, biprofiles, canonical_form,
                             enumerate_graph_objects, find_iso, find_wheel, make_corolla, make_edge, vertex_digraph)


SubstitutionData = namedtuple('SubstitutionData', 'target assignment')


def make_data(target, assignment):
    """assignment is a sequence indexed by vertex or a dict vertex -> graph."""
    if isinstance(assignment, dict):
        assignment = [assignment[v] for v in range(len(target.vertices))]
    assignment = tuple(assignment)
    if len(assignment) != len(target.vertices):
        raise ProfileError('{0} graphs given for {1} vertices'.format(len(assignment), len(target.vertices)))
    return SubstitutionData(target, assignment)


def corolla_data(g):
    """The identity substitution: every vertex replaced by its own corolla."""
    return SubstitutionData(g, tuple(make_corolla(g.vertex_profile(v)) for v in range(len(g.vertices))))


def single_data(g, v, piece):
    """Replace vertex v by piece and every other vertex by its corolla."""
    assignment = list(corolla_data(g).assignment)
    assignment[v] = piece
    return SubstitutionData(g, tuple(assignment))


def check_profiles(d):
    for v, piece in enumerate(d.assignment):
        wanted = d.target.vertex_profile(v)
        if piece.biprofile() != wanted:
            raise ProfileError('vertex {0} has profile {1} but its graph has {2}'.format(v, wanted, piece.biprofile()))


def substitute(d, with_origins=False):
    """K = G{H_v}. With with_origins, also return (v, u) for every vertex of K.

    Vertices of K are numbered by v, then by u inside H_v. Edges of G come
    first (merged where an isolated edge of some H_v joins two of them),
    then internal edges of each H_v in order.
    """
    check_profiles(d)
    g = d.target
    merged = UnionFind(g.edges)
    for v, piece in enumerate(d.assignment):
        ins, outs = g.vertices[v]
        in_pos = dict((e, i) for i, e in enumerate(piece.graph_inputs))
        out_pos = dict((e, i) for i, e in enumerate(piece.graph_outputs))
        for e in piece.edges:
            if e in in_pos and e in out_pos:
                merged.union(ins[in_pos[e]], outs[out_pos[e]])

    class_id = {}
    edges = {}
    for e in sorted(g.edges):
        root = merged.find(e)
        if root not in class_id:
            class_id[root] = len(class_id)
            edges[class_id[root]] = g.edges[e]

    def outer(e):
        return class_id[merged.find(e)]

    next_id = len(class_id)
    vertices = []
    origins = []
    for v, piece in enumerate(d.assignment):
        ins, outs = g.vertices[v]
        in_pos = dict((e, i) for i, e in enumerate(piece.graph_inputs))
        out_pos = dict((e, i) for i, e in enumerate(piece.graph_outputs))
        local = {}
        for e in sorted(piece.edges):
            if e in in_pos:
                local[e] = outer(ins[in_pos[e]])
            elif e in out_pos:
                local[e] = outer(outs[out_pos[e]])
            else:
                local[e] = next_id
                edges[next_id] = piece.edges[e]
                next_id += 1
        for u, (pin, pout) in enumerate(piece.vertices):
            vertices.append(([local[e] for e in pin], [local[e] for e in pout]))
            origins.append((v, u))
    k = ColoredGraph(vertices, edges, [outer(e) for e in g.graph_inputs], [outer(e) for e in g.graph_outputs])
    assert find_wheel(k) is None, 'substitution of wheel-free graphs produced a wheel'
    if with_origins:
        return k, tuple(origins)
    return k


def grafting_template(bp1, bp2):
    """Two vertices: the single output of vertex 0 feeds the single input of vertex 1."""
    n = len(bp1.inputs)
    middle = n
    edges = dict(enumerate(bp1.inputs))
    edges[middle] = bp1.outputs[0]
    tail = dict((middle + 1 + j, c) for j, c in enumerate(bp2.outputs))
    edges.update(tail)
    vertices = [(range(n), (middle,)), ((middle,), sorted(tail))]
    return ColoredGraph(vertices, edges, range(n), sorted(tail))


def graft(g, g2):
    """g2 ∘ g: the output edge of g joined to the input edge of g2."""
    bp1 = g.biprofile()
    bp2 = g2.biprofile()
    if len(bp1.outputs) != 1 or len(bp2.inputs) != 1:
        raise ProfileError('graft needs one output and one input, got {0} and {1}'.format(bp1, bp2))
    if bp1.outputs[0] != bp2.inputs[0]:
        raise ProfileError('graft colors differ: {0} vs {1}'.format(bp1.outputs[0], bp2.inputs[0]))
    return substitute(SubstitutionData(grafting_template(bp1, bp2), (g, g2)))


def compose_substitution_data(inner, outer, iso=None):
    """Data for outer.target whose substitution is strictly iso to substitute(inner).

    inner is substitution data on K and outer is data on G with
    substitute(outer) strictly iso to K; iso, if given, is that GraphIso.
    """
    k_prime, origins = substitute(outer, with_origins=True)
    if iso is None:
        iso = find_iso(k_prime, inner.target, 'strict')
    if iso is None:
        raise IsoError('substitute(outer) is not strictly isomorphic to the inner target')
    position = dict((origin, i) for i, origin in enumerate(origins))
    assignment = []
    for v, piece in enumerate(outer.assignment):
        nested = tuple(inner.assignment[iso.vertex_map[position[(v, u)]]] for u in range(len(piece.vertices)))
        assignment.append(substitute(SubstitutionData(piece, nested)))
    return SubstitutionData(outer.target, tuple(assignment))


def scheme_member(scheme, g):
    return Scheme.parse(scheme).contains(g)


CollapseMove = namedtuple('CollapseMove', 'graph vertex piece members')


def convex_subsets(g):
    """Nonempty vertex sets with no directed path leaving and re-entering them."""
    dg = vertex_digraph(g)
    descendants = dict((v, nx.descendants(dg, v)) for v in dg)
    ancestors = dict((v, nx.ancestors(dg, v)) for v in dg)
    for size in range(1, len(g.vertices) + 1):
        for subset in itertools.combinations(range(len(g.vertices)), size):
            chosen = set(subset)
            below = set().union(*(descendants[v] for v in subset)) - chosen
            above = set().union(*(ancestors[v] for v in subset)) - chosen
            if not below & above:
                yield subset


def collapse_moves(k, scheme=Scheme.PROP, orderings='all'):
    """Every presentation K ≅ G{v ↦ H} with H a scheme graph on >= 1 vertices.

    Edge ids of G and H are those of K. G keeps the other vertices in order
    and puts the collapsed vertex at the position of the least member.
    orderings='all' yields one move per ordering of H's legs, 'single' does
    so only for one-vertex H, 'one' keeps the port-scan order throughout.
    """
    scheme = Scheme.parse(scheme)
    sources, targets = k.ends()
    for members in convex_subsets(k):
        chosen = set(members)
        incident = []
        for u in members:
            for e in k.vertices[u][0] + k.vertices[u][1]:
                if e not in incident:
                    incident.append(e)
        internal = set(e for e in incident if sources.get(e, (None,))[0] in chosen and
                       targets.get(e, (None,))[0] in chosen)
        legs_in = [e for u in members for e in k.vertices[u][0] if e not in internal]
        legs_out = [e for u in members for e in k.vertices[u][1] if e not in internal]
        edges = dict((e, k.edges[e]) for e in incident)
        base = ColoredGraph([k.vertices[u] for u in members], edges, legs_in, legs_out)
        if not scheme.contains(base, checked=True):
            continue
        if orderings == 'all' or (orderings == 'single' and len(members) == 1):
            in_orders = itertools.permutations(legs_in)
            out_orders = list(itertools.permutations(legs_out))
        else:
            in_orders = [legs_in]
            out_orders = [legs_out]
        position = sum(1 for w in range(members[0]) if w not in chosen)
        rest = [k.vertices[w] for w in range(len(k.vertices)) if w not in chosen]
        outer_edges = dict((e, c) for e, c in k.edges.items() if e not in internal)
        for h_in in in_orders:
            for h_out in out_orders:
                piece = ColoredGraph(base.vertices, edges, h_in, h_out)
                vertices = rest[:position] + [(h_in, h_out)] + rest[position:]
                g = ColoredGraph(vertices, outer_edges, k.graph_inputs, k.graph_outputs)
                yield CollapseMove(g, position, piece, members)


def piece_labels(move, labels):
    return tuple(labels[u] for u in move.members)


def collapsed_labels(move, labels, value):
    """Labels of move.graph: the other vertices keep theirs, the new vertex gets value."""
    chosen = set(move.members)
    rest = [label for w, label in enumerate(labels) if w not in chosen]
    return tuple(rest[:move.vertex] + [value] + rest[move.vertex:])


def _piece_library(scheme, colors, profiles, piece_vertices, vertex_arity_bound):
    library = {}
    for profile in profiles:
        library[profile] = enumerate_graph_objects(scheme, colors, profile, piece_vertices, vertex_arity_bound)
    return library


def scheme_graphs(scheme, colors, max_vertices, vertex_arity_bound, leg_arity_bound=None):
    """All scheme graphs over every biprofile within leg_arity_bound."""
    if leg_arity_bound is None:
        leg_arity_bound = vertex_arity_bound
    out = []
    for bp in biprofiles(colors, leg_arity_bound[0], leg_arity_bound[1]):
        out.extend(enumerate_graph_objects(scheme, colors, bp, max_vertices, vertex_arity_bound))
    return out


def check_closure(scheme, sample_budget=200, max_vertices=3, piece_vertices=2, colors=('c',),
                  vertex_arity_bound=(2, 2), seed=0):
    """Substituting scheme graphs into scheme graphs stays in the scheme.

    Exhaustive over all assignments while a graph has at most sample_budget
    of them; otherwise sample_budget seeded random assignments.
    """
    scheme = Scheme.parse(scheme)
    rng = random.Random(seed)
    graphs = scheme_graphs(scheme, colors, max_vertices, vertex_arity_bound)
    profiles = set(g.vertex_profile(v) for g in graphs for v in range(len(g.vertices)))
    library = _piece_library(scheme, colors, profiles, piece_vertices, vertex_arity_bound)
    checked = 0
    exhaustive = 0
    violations = []
    for g in graphs:
        lists = [library[g.vertex_profile(v)] for v in range(len(g.vertices))]
        chosen, complete = sample_product(lists, sample_budget, rng)
        exhaustive += int(complete)
        for assignment in chosen:
            checked += 1
            k = substitute(SubstitutionData(g, assignment))
            if not scheme.contains(k, checked=True):
                violations.append({'graph': str(canonical_form(g)),
                                   'pieces': [str(canonical_form(p)) for p in assignment]})
    return report(checked, violations, graphs=len(graphs), exhaustive=exhaustive)


def _partitions(items):
    if not items:
        yield ()
        return
    for blocks in multiset_partitions(list(items)):
        yield tuple(tuple(sorted(block)) for block in sorted(blocks))


def block_data(g, blocks):
    """Data on the quotient K with K{H_B} = g, one vertex per block.

    H_B is the full subgraph on B with g's edge ids; K keeps g's legs and
    the edges between blocks. None when collapsing the blocks makes a wheel.
    """
    sources, targets = g.ends()
    block_of = dict((u, i) for i, block in enumerate(blocks) for u in block)
    internal = set(e for e in g.edges if e in sources and e in targets and
                   block_of[sources[e][0]] == block_of[targets[e][0]])
    vertices = []
    pieces = []
    for block in blocks:
        incident = []
        for u in block:
            for e in g.vertices[u][0] + g.vertices[u][1]:
                if e not in incident:
                    incident.append(e)
        legs_in = [e for u in block for e in g.vertices[u][0] if e not in internal]
        legs_out = [e for u in block for e in g.vertices[u][1] if e not in internal]
        pieces.append(ColoredGraph([g.vertices[u] for u in block], dict((e, g.edges[e]) for e in incident),
                                   legs_in, legs_out))
        vertices.append((legs_in, legs_out))
    k = ColoredGraph(vertices, dict((e, c) for e, c in g.edges.items() if e not in internal),
                     g.graph_inputs, g.graph_outputs)
    if find_wheel(k) is not None:
        return None
    return SubstitutionData(k, tuple(pieces))


def nests(g):
    """Every (inner, outer) with substitute(inner) = g and substitute(outer) = inner.target.

    inner collapses a partition of g's vertices, outer a partition of the
    resulting vertices; pieces are the full subgraphs on the blocks.
    """
    for fine in _partitions(range(len(g.vertices))):
        inner = block_data(g, fine)
        if inner is None:
            continue
        for coarse in _partitions(range(len(inner.target.vertices))):
            outer = block_data(inner.target, coarse)
            if outer is not None:
                yield inner, outer


def _with_units_removed(inner):
    """inner with every one-vertex (c;c) piece replaced by the edge of color c."""
    assignment = []
    changed = False
    for piece in inner.assignment:
        bp = piece.biprofile()
        if len(piece.vertices) == 1 and bp.size == 2 and bp.inputs == bp.outputs:
            assignment.append(make_edge(bp.inputs[0]))
            changed = True
        else:
            assignment.append(piece)
    if changed:
        return SubstitutionData(inner.target, tuple(assignment))
    return None


def check_substitution_laws(graphs):
    """Unit and associativity of substitution on every nest of every graph.

    Associativity compares substitute(compose(inner, outer)) with
    substitute(inner) up to strict isomorphism; it is also run with the
    one-vertex (c;c) pieces of inner swapped for bare edges, so that
    vertex-free pieces are covered.
    """
    checked = 0
    nested = 0
    violations = []
    for g in graphs:
        code = canonical_form(g)
        checked += 2
        if canonical_form(substitute(corolla_data(g))) != code:
            violations.append({'law': 'right unit', 'graph': str(code)})
        if canonical_form(substitute(SubstitutionData(make_corolla(g.biprofile()), (g,)))) != code:
            violations.append({'law': 'left unit', 'graph': str(code)})
        for inner, outer in nests(g):
            nested += 1
            checked += 1
            if canonical_form(substitute(inner)) != code:
                violations.append({'law': 'collapse', 'graph': str(code)})
                continue
            iso = find_iso(substitute(outer), inner.target, 'strict')
            if iso is None:
                violations.append({'law': 'collapse', 'graph': str(canonical_form(inner.target))})
                continue
            variants = [inner]
            stripped = _with_units_removed(inner)
            if stripped is not None:
                variants.append(stripped)
            checked += len(variants) - 1
            for data in variants:
                composed = compose_substitution_data(data, outer, iso)
                if canonical_form(substitute(composed)) != canonical_form(substitute(data)):
                    violations.append({'law': 'associativity', 'graph': str(code),
                                       'pieces': [str(canonical_form(p)) for p in outer.assignment]})
    return report(checked, violations, graphs=len(graphs), nests=nested)


def check_graft_additivity(graphs):
    """betti(g2 ∘ g) == betti(g) + betti(g2) for every graftable pair."""
    numbers = [betti(g) for g in graphs]
    checked = 0
    violations = []
    for g, b1 in zip(graphs, numbers):
        bp = g.biprofile()
        if len(bp.outputs) != 1:
            continue
        for g2, b2 in zip(graphs, numbers):
            bp2 = g2.biprofile()
            if len(bp2.inputs) != 1 or bp2.inputs[0] != bp.outputs[0]:
                continue
            checked += 1
            b = betti(graft(g, g2))
            if b != (b1[0] + b2[0], b1[1] + b2[1]):
                violations.append({'first': str(canonical_form(g)), 'second': str(canonical_form(g2)),
                                   'betti': list(b)})
    return report(checked, violations)


def graftable_graphs(scheme, colors, max_vertices, vertex_arity_bound, vertex_profiles=None):
    """Scheme graphs with exactly one input and one output."""
    out = []
    for c in colors:
        for d in colors:
            out.extend(enumerate_graph_objects(scheme, colors, Biprofile((c,), (d,)), max_vertices,
                                               vertex_arity_bound, vertex_profiles))
    return out
