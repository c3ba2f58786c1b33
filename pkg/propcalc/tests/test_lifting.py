import pytest

from propcalc import ssets
from propcalc.common import Bounds
from propcalc.corpus import Corpus
from propcalc.lifting import (boxslash, bounds_monotonicity_check, characterize_fibration, classify_morphism,
                              generators, kan_agreement_check, local_class_check, local_lifting_equivalence,
                              retract_check, rlp_adjunction_check, rlp_generators, two_of_three_check)

BOUNDS = Bounds(horn=2)


@pytest.fixture(scope='module')
def corpus():
    return Corpus()


def horn_inclusion(k, p):
    return ssets.inclusion(ssets.horn(k, p), ssets.simplex(p))


def test_inner_horn_fills_in_interval():
    verdict = boxslash(horn_inclusion(1, 2), ssets.terminal_map(ssets.simplex(1)))
    assert verdict.is_yes


def test_inner_horn_does_not_fill_in_boundary():
    verdict = boxslash(horn_inclusion(1, 2), ssets.terminal_map(ssets.boundary(2)))
    assert verdict.is_no
    assert set(verdict.witness) == set(['i', 'f', 'top', 'bottom'])


def test_boundary_inclusion_against_two_points():
    i = ssets.inclusion(ssets.boundary(1), ssets.simplex(1))
    assert boxslash(i, ssets.terminal_map(ssets.boundary(1))).is_no


def test_isomorphisms_always_lift():
    X = ssets.boundary(2)
    assert boxslash(horn_inclusion(0, 2), ssets.SSetMap.identity(X)).is_yes


def test_boxslash_budget():
    verdict = boxslash(horn_inclusion(1, 2), ssets.terminal_map(ssets.boundary(2)), 1)
    assert verdict.value == 'bound'
    assert not verdict.decisive


def test_generators():
    assert [name for name, _ in generators('I', 1)] == ['∂Δ[0]', '∂Δ[1]']
    assert [name for name, _ in generators('J', 2)] == ['Λ[0,1]', 'Λ[1,1]', 'Λ[0,2]', 'Λ[1,2]', 'Λ[2,2]']
    with pytest.raises(ValueError):
        generators('K', 1)


@pytest.mark.parametrize('name,I,J', [
    ('Δ[1] -> Δ[0]', 'no', 'no'),
    ('∂Δ[1] -> Δ[0]', 'no', 'yes'),
    ('Δ[0] ↪ Δ[1]', 'no', 'no'),
    ('id Δ[1]', 'yes', 'yes'),
    ('swap ∂Δ[1]', 'yes', 'yes'),
])
def test_rlp_generators_on_zero_morphisms(corpus, name, I, J):
    f = corpus.zero_morphism(name)
    assert rlp_generators(f, 'I', BOUNDS).value == I
    assert rlp_generators(f, 'J', BOUNDS).value == J
    assert rlp_generators(f, 'C2', BOUNDS).is_yes


@pytest.mark.parametrize('name,W1,W2', [
    ('Δ[1] -> Δ[0]', 'yes', 'yes'),
    ('∂Δ[1] -> Δ[0]', 'no', 'no'),
    ('Δ[0] ↪ Δ[1]', 'yes', 'yes'),
    ('Δ[0] ↪ ∂Δ[1]', 'no', 'no'),
    ('s1: Δ[2] -> Δ[1]', 'yes', 'yes'),
    ('id Δ[2]', 'yes', 'yes'),
])
def test_classify_zero_morphisms(corpus, name, W1, W2):
    c = classify_morphism(corpus.zero_morphism(name), BOUNDS)
    assert c.W1.value == W1
    assert c.W2.value == W2


def test_classify_reports_requested_flags_only(corpus):
    c = classify_morphism(corpus.zero_morphism('Δ[1] -> Δ[0]'), BOUNDS, ('W1',))
    assert c.W1.is_yes
    assert c.F1.value == 'unknown'
    assert set(c.to_json()) == set(['W1', 'W2', 'F1', 'F2'])


def test_classify_other_morphisms(corpus):
    identity, terminal, quotient, include, squash = corpus.other_morphisms()
    assert classify_morphism(identity, BOUNDS).weak_equivalence.is_yes
    assert classify_morphism(identity, BOUNDS).fibration.is_yes
    assert classify_morphism(terminal, BOUNDS).weak_equivalence.is_yes
    c = classify_morphism(quotient, BOUNDS)
    assert (c.W1.value, c.W2.value, c.F2.value) == ('no', 'no', 'yes')
    c = classify_morphism(include, BOUNDS)
    assert (c.W2.value, c.F2.value) == ('yes', 'no')
    assert rlp_generators(include, 'C2').is_no
    assert classify_morphism(squash, BOUNDS).W2.is_yes


def test_characterize_fibration(corpus):
    assert characterize_fibration(corpus.zero_morphism('∂Δ[1] -> Δ[0]'), BOUNDS).is_yes
    assert characterize_fibration(corpus.zero_morphism('Δ[1] -> Δ[0]'), BOUNDS).is_no


def test_local_lifting_equivalence(corpus):
    result = local_lifting_equivalence(corpus.zero_morphism('Δ[1] -> Δ[0]'), BOUNDS)
    assert result['decisive']
    assert result['violations'] == []
    assert (result['I'], result['J'], result['W1']) == ('no', 'no', 'yes')


@pytest.mark.parametrize('name', ['Δ[1] -> Δ[0]', '∂Δ[1] -> Δ[0]', 'Δ[0] ↪ Δ[1]', 'swap ∂Δ[1]'])
def test_kan_agreement(corpus, name):
    assert kan_agreement_check(corpus.zero_morphism(name), BOUNDS)['violations'] == []


def test_two_of_three(corpus):
    g, f = corpus.zero_morphism('Δ[0] ↪ Δ[1]'), corpus.zero_morphism('Δ[1] -> Δ[0]')
    result = two_of_three_check(g, f, BOUNDS)
    assert result['premise'] is True
    assert result['conclusive'] is True
    assert result['violations'] == []


def test_two_of_three_without_premise(corpus):
    g, f = corpus.zero_morphism('∂Δ[1] ↪ Δ[1]'), corpus.zero_morphism('Δ[1] -> Δ[0]')
    result = two_of_three_check(g, f, BOUNDS)
    assert result['premise'] is False
    assert result['checked'] == 0


def test_entrywise_class_breaks_two_of_three(corpus):
    g, f = corpus.remark_triple()
    assert classify_morphism(g, BOUNDS, ('W1',)).W1.is_yes
    assert classify_morphism(f.compose(g), BOUNDS, ('W1',)).W1.is_yes
    assert classify_morphism(f, BOUNDS, ('W1',)).W1.is_no
    assert two_of_three_check(g, f, BOUNDS, local_only=True)['violations']
    assert two_of_three_check(g, f, BOUNDS)['violations'] == []


def test_local_class(corpus):
    result = local_class_check(corpus.pairs()[:4], BOUNDS)
    assert result['violations'] == []
    assert result['checked'] > 0


def test_retract(corpus):
    result = retract_check(corpus.sset_map('Δ[1] -> Δ[0]'), corpus.zero)
    assert result['violations'] == []
    assert result['doubled'] == 'yes'
    assert result['retract'] == 'yes'


def test_rlp_adjunction(corpus):
    result = rlp_adjunction_check(corpus.zero_morphism('Δ[1] -> Δ[0]'), horn_inclusion(0, 1), bounds=BOUNDS)
    assert result['violations'] == []
    assert result['underlying'] == result['free'] == 'yes'


def test_bounds_monotonicity(corpus):
    f = corpus.zero_morphism('Δ[1] -> Δ[0]')
    assert classify_morphism(f, Bounds(horn=1), ('F1',)).F1.is_yes
    assert classify_morphism(f, BOUNDS, ('F1',)).F1.is_no
    assert bounds_monotonicity_check(f, [Bounds(horn=1), BOUNDS])['violations'] == []
