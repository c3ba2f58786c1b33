import pytest

from propcalc import ssets
from propcalc.categories import FiniteCategory, FiniteFunctor
from propcalc.common import BoundError, Bounds, ProfileError, SchemeError, ValidationError
from propcalc.graphs import Biprofile, ColoredGraph, Scheme, disjoint_union, make_chain, make_corolla, make_edge
from propcalc.properads import (PropMorphism, UnderlyingCategory, category_morphism, category_properad,
                                change_of_objects, check_axioms, constant, corrupted_prop, endomorphism_prop,
                                initial_morphism, monoid_properad, morphism_from_json, morphism_to_json,
                                pi0_category, pi0_functor, precompose, prop_from_json, table_properad,
                                terminal_prop, zero_morphism, zero_properad)
from propcalc.ssets import Simplex

ID = ((0,), (1,))
NOT = ((1,), (0,))
ZERO = ((0,), (0,))


def end2(scheme=Scheme.PROPERAD):
    return endomorphism_prop(range(2), scheme, arity_bound=2)


def test_terminal():
    P = terminal_prop(arity_bound=2)
    assert P.entry('c;c').dims == {'*': 0}
    assert P.compose(make_chain(2), ['*', '*']) == '*'
    assert check_axioms(P, Bounds(vertices=2), vertex_arity_bound=(1, 1))['violations'] == []


def test_endomorphism_entries():
    P = end2()
    assert len(P.entry('c;c').dims) == 4
    assert len(P.entry(';c').dims) == 2
    assert len(P.entry('c;').dims) == 1
    assert P.unit('c') == ID


def test_endomorphism_composition():
    P = end2()
    assert P.compose(make_chain(2), [NOT, NOT]) == ID
    assert P.compose(make_chain(2), [NOT, ZERO]) == ZERO
    assert P.compose(make_chain(2), [ZERO, NOT]) == ((1,), (1,))
    assert P.compose(make_edge('c'), []) == ID


def test_gamma_checks_arguments():
    P = end2()
    with pytest.raises(ProfileError):
        P.compose(make_chain(2), [NOT])
    with pytest.raises(ProfileError):
        P.gamma(make_chain(1), [Simplex('nonsense', (0,))])
    with pytest.raises(SchemeError):
        P.compose(disjoint_union(make_corolla('c;c'), make_corolla('c;c')), [ID, ID])
    with pytest.raises(BoundError):
        P.entry('c,c;c,c')
    with pytest.raises(ProfileError):
        P.entry('d;c')


def test_endomorphism_axioms():
    result = check_axioms(end2(), Bounds(vertices=3), vertex_arity_bound=(1, 1))
    assert result['violations'] == []
    assert result['checked'] > 0


def test_corrupted_prop_fails_axioms():
    result = check_axioms(corrupted_prop(end2()), Bounds(vertices=3), vertex_arity_bound=(1, 1))
    assert result['violations']
    assert set(v['law'] for v in result['violations']) <= set(['associativity', 'equivariance', 'unit'])


def test_zero_properad():
    X = ssets.simplex(1)
    P = zero_properad(X)
    entry = P.entry('c;c')
    assert set(entry.dims) == set([('x', (0,)), ('x', (1,)), ('x', (0, 1)), '*', 'id'])
    assert P.entry('c,c;').dims == {}
    assert P.compose(make_chain(2), [('x', (0,)), ('x', (1,))]) == '*'
    assert P.compose(make_chain(2), ['id', ('x', (1,))]) == ('x', (1,))
    edge = Simplex(('x', (0, 1)), (0, 1))
    assert P.gamma(make_chain(2), [edge, constant('id', 1)]) == edge
    assert P.gamma(make_chain(2), [edge, edge]) == constant('*', 1)
    assert check_axioms(P, Bounds(vertices=2))['violations'] == []
    with pytest.raises(SchemeError):
        zero_properad(X, Scheme.PROP)


def test_category_properad():
    P = category_properad(FiniteCategory.chaotic(['a', 'b']), arity_bound=3)
    assert P.colors == ('a', 'b')
    assert P.entry('a;b').dims == {('a', 'b'): 0}
    assert P.entry('a,a;b').dims == {}
    with pytest.raises(BoundError):
        category_properad(FiniteCategory.chaotic(['a', 'b'])).entry('a,a;b')
    graph = ColoredGraph([((0,), (1,)), ((1,), (2,))], {0: 'a', 1: 'b', 2: 'a'}, (0,), (2,))
    assert P.compose(graph, [('a', 'b'), ('b', 'a')]) == ('a', 'a')
    assert check_axioms(P, Bounds(vertices=3))['violations'] == []


def test_monoid_and_table_agree():
    M = monoid_properad(['e', 's'], lambda x, y: 'e' if x == y else 's', 'e')
    T = table_properad(('c',), {'c;c': ['e', 's']}, {'c': 'e'}, [(make_chain(2), ['s', 's'], 'e')])
    for labels in (['s', 's'], ['e', 's'], ['s', 'e']):
        assert M.compose(make_chain(2), labels) == T.compose(make_chain(2), labels)
    assert T.compose(make_chain(3), ['s', 's', 's']) == 's'
    assert check_axioms(T, Bounds(vertices=3))['violations'] == []


def test_underlying_category():
    view = UnderlyingCategory(end2())
    assert view.hom('c', 'c') == end2().entry('c;c')
    assert view.compose(constant(NOT, 0), constant(ZERO, 0), 'c', 'c', 'c') == constant(((1,), (1,)), 0)
    C = pi0_category(view)
    assert len(C.morphisms()) == 4
    assert C.check_laws()['violations'] == []
    assert sorted(f[2] for f in C.isomorphisms()) == sorted([ID, NOT])


def test_change_of_objects():
    P = end2()
    m = precompose(P, 'c;c', 0, NOT, 'c')
    assert m(constant(ID, 0)) == constant(NOT, 0)
    both = change_of_objects(P, 'c;c', [(NOT, 'c')], [(NOT, 'c')])
    assert both(constant(ID, 0)) == constant(ID, 0)
    assert both(constant(ZERO, 0)) == constant(((1,), (1,)), 0)
    with pytest.raises(ProfileError):
        precompose(P, 'c;c', 0, 'nonsense', 'c')


def test_identity_morphism():
    P = end2()
    f = PropMorphism.identity(P)
    assert f.check(Bounds(vertices=2))['violations'] == []
    assert f('c;c', constant(NOT, 0)) == constant(NOT, 0)
    assert f.compose(f)('c;c', constant(NOT, 0)) == constant(NOT, 0)


def test_zero_morphism_checks():
    X, Y = ssets.simplex(1), ssets.simplex(0)
    f = zero_morphism(zero_properad(X), zero_properad(Y), ssets.terminal_map(X, Y))
    assert f.check(Bounds(vertices=2))['violations'] == []
    assert f('c;c', constant(('x', (1,)), 0)) == constant(('x', (0,)), 0)
    assert f('c;c', constant('id', 0)) == constant('id', 0)


def test_morphism_needs_colors():
    with pytest.raises(ValidationError):
        PropMorphism(end2(), end2(), {})
    with pytest.raises(SchemeError):
        PropMorphism(end2(Scheme.PROP), end2(), {'c': 'c'})


def test_broken_morphism_fails_check():
    P = end2()
    negate = dict((f, constant(tuple((1 - y[0],) for y in f), 0)) for f in P.entry('c;c').dims)
    f = PropMorphism(P, P, {'c': 'c'}, {'c;c': negate}, rule=lambda bp, X, Y: ssets.SSetMap.identity(X))
    laws = set(v['law'] for v in f.check(Bounds(vertices=2))['violations'])
    assert 'unit' in laws


def test_morphism_broken_on_binary_vertex():
    P = endomorphism_prop(range(2), Scheme.PROPERAD, arity_bound=3)
    zero = constant(((0,), (0,), (0,), (0,)), 0)
    squash = dict((h, zero) for h in P.entry('c,c;c').dims)
    f = PropMorphism(P, P, {'c': 'c'}, {'c,c;c': squash}, rule=lambda bp, X, Y: ssets.SSetMap.identity(X))
    assert f.check(Bounds(vertices=2), vertex_arity_bound=(1, 1))['violations'] == []
    laws = set(v['law'] for v in f.check(Bounds(vertices=2), sample=16, max_graphs=1000)['violations'])
    assert laws == set(['composition'])


def test_initial_morphism():
    P = zero_properad(ssets.boundary(1))
    f = initial_morphism(P)
    assert f.source.colors == ()
    assert f.check()['violations'] == []
    Q = terminal_prop(Scheme.PROP, arity_bound=2)
    g = initial_morphism(Q)
    assert g(Biprofile(), constant('*', 0)) == constant('*', 0)


def test_category_morphism_and_pi0():
    one = category_properad(FiniteCategory.chaotic(['a']))
    two = category_properad(FiniteCategory.chaotic(['a', 'b']))
    F = FiniteFunctor(one.composer.category, two.composer.category, {'a': 'a'}, {('a', 'a'): ('a', 'a')})
    f = category_morphism(one, two, F)
    assert f.check()['violations'] == []
    G = pi0_functor(f)
    assert G.object_map == {'a': 'a'}
    assert G.check()['violations'] == []


def test_json_fixtures():
    P = prop_from_json({'kind': 'endomorphism', 'scheme': 'prop', 'sets': {'c': [0, 1]}, 'arity_bound': 2})
    assert P.scheme is Scheme.PROP
    assert P.compose(make_chain(2), [NOT, NOT]) == ID
    T = prop_from_json(table_properad(('c',), {'c;c': ['e', 's']}, {'c': 'e'},
                                      [(make_chain(2), ['s', 's'], 'e')]).to_json())
    assert T.compose(make_chain(2), ['s', 's']) == 'e'
    with pytest.raises(ValidationError):
        prop_from_json({'kind': 'operad'})
    with pytest.raises(ValidationError):
        prop_from_json({'kind': 'monoid', 'elements': ['e', 's'], 'unit': 'e',
                        'products': [['e', 'e', 'e'], ['e', 's', 'e'], ['s', 'e', 's'], ['s', 's', 's']]})


def test_morphism_json():
    X, Y = ssets.simplex(1), ssets.simplex(0)
    P, Q = zero_properad(X), zero_properad(Y)
    f = zero_morphism(P, Q, ssets.terminal_map(X, Y))
    g = morphism_from_json(morphism_to_json(f), P, Q)
    for bp in f.biprofiles():
        assert g.entry_map(bp).assignment == f.entry_map(bp).assignment
    with pytest.raises(ValidationError):
        morphism_from_json({'kind': 'functor'}, P, Q)
