import json

import pytest
from hypothesis import given, settings, strategies as st

from propcalc.checks import homology_betti
from propcalc.common import ValidationError
from propcalc.graphs import (Biprofile, ColoredGraph, Scheme, betti, biprofiles, canonical_form, canonical_labeling,
                             check, disjoint_union, enumerate_graph_objects, enumerate_graphs, find_iso,
                             make_chain, make_corolla, make_edge, relabel, validate)


def genus_one():
    # One vertex splits the input in two, the other joins them back.
    return ColoredGraph([((0,), (1, 2)), ((1, 2), (3,))], {0: 'c', 1: 'c', 2: 'c', 3: 'c'}, (0,), (3,))


def test_biprofile_parse():
    bp = Biprofile.parse('c,c;d')
    assert bp.inputs == ('c', 'c')
    assert bp.outputs == ('d',)
    assert bp.arity == (2, 1)
    assert bp.size == 3
    assert str(bp) == 'c,c;d'
    assert Biprofile.parse(';') == Biprofile()
    assert Biprofile.parse(' c ; ') == Biprofile(('c',), ())


def test_biprofile_parse_needs_semicolon():
    with pytest.raises(ValidationError):
        Biprofile.parse('c,c')


def test_biprofiles_respects_size():
    found = biprofiles(('c',), 2, 2, 2)
    assert Biprofile() in found
    assert Biprofile(('c', 'c'), ()) in found
    assert all(bp.size <= 2 for bp in found)
    assert len(found) == 6


def test_betti():
    assert betti(make_edge('c')) == (0, 0)
    assert betti(make_corolla('c,c;c')) == (0, 0)
    assert betti(genus_one()) == (0, 1)
    assert betti(disjoint_union(make_corolla('c;c'), make_corolla('c;c'))) == (1, 0)
    assert betti(ColoredGraph()) == (0, 0)


def test_scheme_membership():
    tree = make_chain(2)
    two = disjoint_union(make_corolla('c;c'), make_corolla('c;c'))
    assert Scheme.DIOPERAD.contains(tree)
    assert not Scheme.DIOPERAD.contains(genus_one())
    assert Scheme.PROPERAD.contains(genus_one())
    assert not Scheme.PROPERAD.contains(two)
    assert Scheme.PROP.contains(two)
    assert Scheme.DIOPERAD < Scheme.PROPERAD <= Scheme.PROP


@pytest.mark.parametrize('name,scheme', [
    ('gr', Scheme.PROP), ('Gr↑', Scheme.PROP), ('c', Scheme.PROPERAD),
    ('Gr↑_c', Scheme.PROPERAD), ('di', Scheme.DIOPERAD), ('dioperad', Scheme.DIOPERAD)])
def test_scheme_parse(name, scheme):
    assert Scheme.parse(name) is scheme


def test_scheme_parse_unknown():
    with pytest.raises(ValidationError):
        Scheme.parse('operad')


def test_validate_finds_wheel():
    wheel = ColoredGraph([((0,), (1,)), ((1,), (0,))], {0: 'c', 1: 'c'})
    problems = validate(wheel)
    assert len(problems) == 1
    assert problems[0].startswith('wheel')
    with pytest.raises(ValidationError):
        check(wheel)


def test_validate_legs():
    g = ColoredGraph([((0,), (1,))], {0: 'c', 1: 'c'}, (0,), ())
    assert validate(g) == ['graph_outputs omits dangling edge 1']
    g = ColoredGraph([((0,), (1,))], {0: 'c', 1: 'c'}, (0, 0), (1,))
    assert validate(g) == ['graph_inputs lists edge 0 twice']


def test_validate_colors():
    assert validate(make_corolla('c;d'), colors=('c',)) == ['edge 1 has unknown color \'d\'']


def test_json_renumbers_edges():
    g = ColoredGraph.from_json({
        'colors': ['c'],
        'vertices': [{'inputs': ['a'], 'outputs': ['b']}],
        'edges': [{'id': 'a', 'color': 'c'}, {'id': 'b', 'color': 'c'}],
        'graph_inputs': ['a'],
        'graph_outputs': ['b'],
    })
    assert g == make_corolla('c;c')
    assert ColoredGraph.from_json(g.to_json()) == g


def test_json_rejects_unknown_edge():
    with pytest.raises(ValidationError):
        ColoredGraph.from_json({'edges': [], 'vertices': [{'inputs': ['x'], 'outputs': []}]})


def test_json_rejects_unknown_color():
    with pytest.raises(ValidationError):
        ColoredGraph.from_json({'colors': ['c'], 'edges': [{'id': 0, 'color': 'd'}],
                                'graph_inputs': [0], 'graph_outputs': [0]})


def test_canonical_form_ignores_numbering():
    g = genus_one()
    h = relabel(g, (1, 0), {0: 3, 1: 2, 2: 1, 3: 0})
    assert g != h
    assert canonical_form(g) == canonical_form(h)
    assert find_iso(g, h, 'strict') is not None


def test_canonical_form_sees_leg_order():
    a = make_corolla('c,d;c')
    b = make_corolla('d,c;c')
    assert canonical_form(a) != canonical_form(b)
    assert find_iso(a, b, 'strict') is None


def test_weak_iso_forgets_leg_order():
    g = ColoredGraph([((0, 1), (2,))], {0: 'c', 1: 'c', 2: 'c'}, (0, 1), (2,))
    h = ColoredGraph([((0, 1), (2,))], {0: 'c', 1: 'c', 2: 'c'}, (1, 0), (2,))
    assert find_iso(g, h, 'strict') is None
    assert find_iso(g, h, 'weak') is not None


def test_canonical_labeling_orders():
    code, vertex_order, edge_order = canonical_labeling(genus_one())
    assert sorted(vertex_order) == [0, 1]
    assert sorted(edge_order) == [0, 1, 2, 3]
    payload = json.loads(str(code))
    assert len(payload['vertices']) == 2
    assert code.graph() == code.graph()
    assert canonical_form(code.graph()) == code


def test_enumerate_dioperad_one_vertex():
    codes = enumerate_graphs('Gr↑_di', ('c',), 'c;c', 1, (1, 1))
    assert len(codes) == 2
    graphs = [code.graph() for code in codes]
    assert len(graphs[0].vertices) == 0
    assert len(graphs[1].vertices) == 1


def test_enumerate_chains():
    # (c;c) graphs built from (c;c) vertices only are chains.
    codes = enumerate_graphs(Scheme.PROPERAD, ('c',), 'c;c', 3, vertex_profiles=['c;c'])
    assert len(codes) == 4
    assert [len(code.graph().vertices) for code in codes] == [0, 1, 2, 3]


def test_enumerate_finds_genus_one():
    codes = enumerate_graphs(Scheme.PROPERAD, ('c',), 'c;c', 2, (2, 2))
    assert canonical_form(genus_one()) in codes
    assert canonical_form(genus_one()) not in enumerate_graphs(Scheme.DIOPERAD, ('c',), 'c;c', 2, (2, 2))


def test_enumerated_graphs_are_valid():
    for scheme in Scheme:
        for g in enumerate_graph_objects(scheme, ('c', 'd'), 'c;d', 2, (1, 2)):
            assert validate(g) == []
            assert scheme.contains(g)
            assert g.biprofile() == Biprofile(('c',), ('d',))


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=3).flatmap(
    lambda n: st.tuples(st.just(n), st.permutations(range(n)), st.permutations(range(n + 1)))))
def test_chain_canonical_form_is_invariant(case):
    length, vertex_perm, edge_perm = case
    g = make_chain(length)
    h = relabel(g, vertex_perm, dict(enumerate(edge_perm)))
    assert canonical_form(h) == canonical_form(g)


FAMILIES = [
    (Scheme.PROPERAD, ('c',), ['c;c'], 4, ['c;c', 'c;c,c', 'c,c;c']),
    (Scheme.PROPERAD, ('c',), ['c,c;c,c'], 3, ['c;c,c', 'c,c;c', 'c,c;c,c']),
    (Scheme.DIOPERAD, ('c', 'd'), ['c;d', 'c,d;d'], 4, ['c;d', 'd;c', 'c,d;d', 'd;c,d']),
    (Scheme.PROP, ('c', 'd'), ['c;d', 'c,d;', ';c,d', 'c;c'], 2, None),
]


def family(scheme, colors, bps, max_vertices, profiles):
    graphs = []
    for bp in bps:
        graphs.extend(enumerate_graph_objects(scheme, colors, bp, max_vertices, vertex_profiles=profiles))
    return graphs


def reversed_copy(g):
    edges = sorted(g.edges)
    return relabel(g, range(len(g.vertices))[::-1], dict(zip(edges, edges[::-1])))


@pytest.mark.parametrize('scheme,colors,bps,max_vertices,profiles', FAMILIES)
def test_canonical_form_decides_strict_iso(scheme, colors, bps, max_vertices, profiles):
    graphs = family(scheme, colors, bps, max_vertices, profiles)
    assert len(set(canonical_form(g) for g in graphs)) == len(graphs)
    buckets = {}
    for g in graphs:
        key = (g.biprofile(), tuple(sorted(g.vertex_profile(v) for v in range(len(g.vertices)))))
        buckets.setdefault(key, []).append(g)
    for bucket in buckets.values():
        for i, g in enumerate(bucket):
            h = reversed_copy(g)
            assert canonical_form(h) == canonical_form(g)
            assert find_iso(h, g, 'strict') is not None
            for other in bucket[i + 1:]:
                assert find_iso(g, other, 'strict') is None


def test_canonical_form_of_six_vertex_graphs():
    graphs = enumerate_graph_objects(Scheme.PROPERAD, ('c',), 'c;c', 6, vertex_profiles=['c;c,c', 'c,c;c'])
    assert max(len(g.vertices) for g in graphs) == 6
    for g in graphs:
        h = reversed_copy(g)
        assert canonical_form(h) == canonical_form(g)
        assert find_iso(h, g, 'strict') is not None


@pytest.mark.parametrize('scheme,colors,bps,max_vertices,profiles', FAMILIES)
def test_betti_agrees_with_homology(scheme, colors, bps, max_vertices, profiles):
    graphs = family(scheme, colors, bps, max_vertices, profiles)
    assert graphs
    for g in graphs:
        assert betti(g) == homology_betti(g)
