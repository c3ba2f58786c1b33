import pytest

from propcalc import ssets
from propcalc.common import BoundError, SchemeError, ValidationError
from propcalc.free import (C_PROP, DI_C, adjunction_unit, beta_decomposition_check, beta_tilde,
                           extension_laws_check, formal_composite_check, free_entry_table, free_prop,
                           gnm_colors, gnm_hom_check, left_adjoint_truncated, materialize_Gnm, monotonicity_check,
                           pair_name, parse_pair, stratum_zero_check, transfer_check, unit_injectivity_check,
                           well_behaved_check)
from propcalc.graphs import (Biprofile, ColoredGraph, Scheme, disjoint_union, enumerate_graph_objects, make_chain,
                             make_corolla)
from propcalc.properads import PropMorphism, constant, corrupted_prop, endomorphism_prop, terminal_prop

ID = ((0,), (1,))
NOT = ((1,), (0,))


def genus_one():
    return ColoredGraph([((0,), (1, 2)), ((1, 2), (3,))], dict((e, 'c') for e in range(4)), (0,), (3,))


@pytest.mark.parametrize('name,pair', [
    ('di-c', DI_C),
    ('L1', DI_C),
    ('c-prop', C_PROP),
    ('c->prop', C_PROP),
])
def test_parse_pair(name, pair):
    assert parse_pair(name) == pair
    assert parse_pair(pair) is pair


def test_parse_pair_rejects_unknown():
    with pytest.raises(ValidationError):
        parse_pair('prop-c')
    assert pair_name(DI_C) == 'di-c'
    assert pair_name(C_PROP) == 'c-prop'


def test_beta_tilde():
    assert beta_tilde(ColoredGraph(), DI_C) is None
    assert beta_tilde(make_chain(2), DI_C) == 0
    assert beta_tilde(make_chain(2), C_PROP) == 0
    assert beta_tilde(genus_one(), DI_C) == 1
    assert beta_tilde(genus_one(), C_PROP) == 0
    assert beta_tilde(disjoint_union(make_corolla('c;'), make_corolla(';c')), C_PROP) == 1


def test_free_prop_entries():
    G = free_prop(Scheme.PROPERAD, ('c',), {'c;c': ssets.simplex(1)}, arity_bound=2, max_vertices=2)
    entry = G.entry('c;c')
    # edge, one vertex and two vertices in a row
    assert len(entry.cells(0)) == 1 + 2 + 4
    assert G.unit('c') in entry.dims
    assert entry.validate() == []
    assert G.compose(make_chain(2), [G.unit('c'), G.unit('c')]) == G.unit('c')


def test_formal_composites():
    G = free_prop(Scheme.PROPERAD, ('c',), {'c;c': ssets.simplex(1)}, arity_bound=2, max_vertices=2)
    graphs = enumerate_graph_objects(Scheme.PROPERAD, ('c',), 'c;c', 2, vertex_profiles=['c;c'])
    result = formal_composite_check(G, graphs)
    assert result['violations'] == []
    assert result['checked'] > 0
    assert result['skipped'] > 0


def test_materialize_gnm():
    assert gnm_colors(2, 1) == (('c1', 'c2'), ('d1',))
    G = materialize_Gnm(1, 1, ssets.simplex(0))
    assert G.colors == ('c1', 'd1')
    assert len(G.entry('c1;d1').cells(0)) == 1
    with pytest.raises(ValidationError):
        materialize_Gnm(0, 0, ssets.simplex(0))


@pytest.mark.parametrize('X,homs', [
    (ssets.empty(), 1),
    (ssets.simplex(0), 4),
    (ssets.boundary(1), 16),
])
def test_gnm_homs_into_endomorphisms(X, homs):
    P = endomorphism_prop(range(2), Scheme.PROPERAD, arity_bound=2)
    result = gnm_hom_check(1, 1, X, P, verify_extensions=False)
    assert result['violations'] == []
    assert result['homs'] == homs


def test_gnm_homs_extend():
    P = terminal_prop(Scheme.PROPERAD, arity_bound=3)
    result = gnm_hom_check(1, 1, ssets.simplex(1), P)
    assert result['violations'] == []
    assert result['homs'] == 1


def test_left_adjoint_of_terminal_dioperad():
    P = terminal_prop(Scheme.DIOPERAD, arity_bound=2)
    entry = left_adjoint_truncated(P, DI_C, 'c;c', 2)
    assert len(entry) == 1
    assert entry.beta(0) == 0
    assert entry.to_json()['pair'] == 'di-c'


def test_left_adjoint_counts_genus():
    P = terminal_prop(Scheme.DIOPERAD, arity_bound=4)
    entry = left_adjoint_truncated(P, DI_C, 'c;c', 2, vertex_arity_bound=(2, 2))
    assert len(entry.stratum(0)) == 1
    assert entry.stratum(1)
    assert entry.class_of(genus_one(), (constant('*', 0), constant('*', 0))) in entry.stratum(1)
    graph, labels = entry.representative(entry.stratum(1)[0])
    assert beta_tilde(graph, DI_C) == 1


def test_left_adjoint_guards():
    with pytest.raises(SchemeError):
        left_adjoint_truncated(endomorphism_prop(range(2), Scheme.PROP, arity_bound=2), C_PROP, 'c;c', 2)
    with pytest.raises(BoundError):
        left_adjoint_truncated(terminal_prop(Scheme.DIOPERAD, arity_bound=2), DI_C, 'c;c', 2, budget=1)


def test_beta_decomposition():
    P = endomorphism_prop(range(2), Scheme.PROPERAD, arity_bound=2)
    for bp in ('c;c', 'c;', ';c'):
        result = beta_decomposition_check(P, C_PROP, bp, 2)
        assert result['violations'] == []
    result = beta_decomposition_check(terminal_prop(Scheme.DIOPERAD, arity_bound=4), DI_C, 'c;c', 2,
                                      vertex_arity_bound=(2, 2))
    assert result['violations'] == []
    assert result['stratum'] == 1


def test_left_adjoint_defaults_to_the_arity_bound():
    P = terminal_prop(Scheme.DIOPERAD, arity_bound=3)
    assert left_adjoint_truncated(P, DI_C, 'c;c', 2).stratum(1)
    assert not left_adjoint_truncated(P, DI_C, 'c;c', 2, vertex_arity_bound=(1, 1)).stratum(1)


@pytest.mark.parametrize('scheme,pair', [
    (Scheme.PROPERAD, C_PROP),
    (Scheme.DIOPERAD, DI_C),
])
def test_stratum_zero_of_endomorphisms(scheme, pair):
    P = endomorphism_prop(range(2), scheme, arity_bound=3)
    for bp in ('c;c', 'c,c;c', 'c;c,c'):
        result = stratum_zero_check(P, pair, bp, 2, vertex_arity_bound=(2, 2), sample=16)
        assert result['violations'] == []
        assert result['graphs'] > 1
        assert result['shapes'] >= result['graphs']


def test_stratum_zero_agrees_with_the_full_entry():
    P = terminal_prop(Scheme.DIOPERAD, arity_bound=4)
    assert stratum_zero_check(P, DI_C, 'c;c', 2, vertex_arity_bound=(2, 2))['violations'] == []
    assert beta_decomposition_check(P, DI_C, 'c;c', 2, vertex_arity_bound=(2, 2))['violations'] == []


def test_stratum_zero_catches_a_corrupted_prop():
    P = corrupted_prop(endomorphism_prop(range(2), Scheme.PROPERAD, arity_bound=2))
    result = stratum_zero_check(P, C_PROP, 'c;c', 2)
    assert 'gamma constant' in set(v['law'] for v in result['violations'])
    with pytest.raises(SchemeError):
        stratum_zero_check(P, DI_C, 'c;c', 2)


def test_adjunction_unit_is_injective():
    P = endomorphism_prop(range(2), Scheme.PROPERAD, arity_bound=2)
    eta = adjunction_unit(P, C_PROP, 'c;c', 2)
    table = eta.table()
    assert len(table) == 4
    assert eta.is_injective()
    assert unit_injectivity_check(P, C_PROP, 2)['violations'] == []


def test_truncation_monotonicity():
    P = terminal_prop(Scheme.DIOPERAD, arity_bound=2)
    assert monotonicity_check(P, DI_C, 'c;c', 1)['violations'] == []


def test_extension_category_laws():
    result = extension_laws_check(DI_C, ('c',), Biprofile.parse('c;c'), 2)
    assert result['violations'] == []
    assert result['objects'] == 3


def test_well_behaved_endomorphisms():
    P = endomorphism_prop(range(2), Scheme.PROPERAD, arity_bound=2)
    result = well_behaved_check(C_PROP, P, 2)
    assert result['violations'] == []
    assert result['isomorphisms'] == 2


def test_transfer_along_identity():
    P = endomorphism_prop(range(2), Scheme.PROPERAD, arity_bound=2)
    result = transfer_check(PropMorphism.identity(P), C_PROP, 2)
    assert result['violations'] == []
    assert result['L_essential'] is True
    assert result['L_isofibration'] is True


def test_free_entry_table():
    table = free_entry_table(terminal_prop(Scheme.DIOPERAD, arity_bound=2), DI_C, 'c;c', 2)
    assert table['N'] == 2
    assert table['biprofile'] == 'c;c'
    assert [c['beta'] for c in table['classes']] == [0]
