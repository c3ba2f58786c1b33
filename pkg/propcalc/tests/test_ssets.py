import pytest

from propcalc import ssets
from propcalc.common import ValidationError
from propcalc.ssets import (FinSimplicialSet, Simplex, SSetMap, homology, inclusion, is_kan_complex,
                            is_kan_fibration, pi0, surjections, terminal_map, weak_equivalence_verdict)


def circle():
    return FinSimplicialSet({'v': 0, 'loop': 1}, {'loop': [('v', (0,)), ('v', (0,))]}, 'S1')


def test_surjections():
    assert list(surjections(2, 1)) == [(0, 1, 1), (0, 0, 1)]
    assert list(surjections(1, 1)) == [(0, 1)]
    assert list(surjections(2, 0)) == [(0, 0, 0)]


def test_simplex_cells():
    X = ssets.simplex(2)
    assert X.cells(0) == ((0,), (1,), (2,))
    assert X.cells(2) == ((0, 1, 2),)
    assert X.face(X.point((0, 1, 2)), 1) == Simplex((0, 2), (0, 1))
    assert len(X.simplices(1)) == 3 + 3


def test_builders_validate():
    for X in (ssets.simplex(3), ssets.boundary(2), ssets.horn(0, 2), ssets.horn(1, 3), ssets.empty(), circle()):
        assert X.validate() == []
    assert len(ssets.horn(1, 2).cells(1)) == 2
    assert ssets.boundary(0).dims == {}
    with pytest.raises(ValidationError):
        ssets.horn(0, 0)


def test_face_of_degenerate_simplex():
    X = ssets.simplex(1)
    s = X.degeneracy(X.point((0, 1)), 0)
    assert s == Simplex((0, 1), (0, 0, 1))
    assert X.face(s, 0) == X.point((0, 1))
    assert X.face(s, 2) == Simplex((0,), (0, 0))


def test_invalid_faces():
    X = FinSimplicialSet({'a': 0, 'e': 1}, {'e': [('a', (0,))]})
    assert X.validate() == ["cell 'e' of dim 1 has 1 faces"]
    with pytest.raises(ValidationError):
        X.check()


def test_json_round_trip():
    X = ssets.horn(1, 2)
    assert FinSimplicialSet.from_json(X.to_json()) == X


def test_product_of_intervals():
    X = ssets.product(ssets.simplex(1), ssets.simplex(1))
    assert [len(X.cells(n)) for n in range(3)] == [4, 5, 2]
    assert X.validate() == []
    assert [g.rank for g in homology(X)] == [1, 0, 0]


def test_product_projections_and_diagonal():
    I = ssets.simplex(1)
    X = ssets.product(I, I)
    diagonal = ssets.pairing(I, X, [SSetMap.identity(I), SSetMap.identity(I)])
    assert diagonal.validate() == []
    for i in range(2):
        p = ssets.projection(X, [I, I], i)
        assert p.validate() == []
        assert p.compose(diagonal) == SSetMap.identity(I)


def test_simplex_map():
    I = ssets.simplex(1)
    s1 = ssets.simplex_map(2, I, Simplex((0, 1), (0, 1, 1)))
    assert s1.validate() == []
    assert s1.assignment[(0, 1)] == Simplex((0, 1), (0, 1))
    assert s1.assignment[(1, 2)] == Simplex((1,), (0, 0))


def test_coproduct_injection():
    total = ssets.coproduct(ssets.simplex(0), ssets.simplex(1))
    assert len(total.dims) == 4
    i = ssets.injection([ssets.simplex(0), ssets.simplex(1)], total, 1)
    assert i.validate() == []
    assert i.is_injective_on_cells()
    assert not i.is_iso()


def test_pi0():
    assert len(pi0(ssets.boundary(1)).classes) == 2
    assert len(pi0(ssets.horn(0, 2)).classes) == 1
    assert len(pi0(ssets.empty()).classes) == 0


@pytest.mark.parametrize('X,ranks', [
    (ssets.simplex(0), [1]),
    (ssets.boundary(1), [2]),
    (ssets.boundary(2), [1, 1]),
    (ssets.boundary(3), [1, 0, 1]),
    (ssets.horn(1, 2), [1, 0]),
])
def test_homology_ranks(X, ranks):
    assert [g.rank for g in homology(X)] == ranks


def test_homology_of_circle():
    h0, h1 = homology(circle())
    assert (h0.rank, h1.rank) == (1, 1)
    assert h1.torsion == ()


def test_projective_plane_has_torsion():
    # One vertex, one loop a and one triangle with faces a, s0 v, a, so ∂t = 2a.
    X = FinSimplicialSet({'v': 0, 'a': 1, 't': 2},
                         {'a': [('v', (0,)), ('v', (0,))],
                          't': [('a', (0, 1)), ('v', (0, 0)), ('a', (0, 1))]}, 'RP2')
    X.check()
    h = homology(X)
    assert h[1].rank == 0
    assert h[1].torsion == (2,)
    assert h[2].rank == 0


def test_map_validation():
    A, X = ssets.boundary(1), ssets.simplex(1)
    assert inclusion(A, X).is_injective_on_cells()
    bad = SSetMap(X, X, {(0,): Simplex((0,), (0,)), (1,): Simplex((1,), (0,)), (0, 1): Simplex((0,), (0, 0))})
    assert bad.validate() == ['map does not commute with d0 on (0, 1)']
    with pytest.raises(ValidationError):
        bad.check()


def test_map_json():
    f = terminal_map(ssets.simplex(1))
    g = SSetMap.from_json(f.to_json())
    assert g == f
    assert g.source == ssets.simplex(1)


def test_compose():
    f = inclusion(ssets.simplex(0), ssets.simplex(1))
    g = terminal_map(ssets.simplex(1))
    h = g.compose(f)
    assert h.source == ssets.simplex(0)
    assert h.is_iso()


def test_maps_enumeration():
    assert len(ssets.maps(ssets.simplex(1), ssets.simplex(1))) == 3
    assert len(ssets.maps(ssets.boundary(1), ssets.simplex(1))) == 4
    assert len(ssets.maps(ssets.empty(), ssets.simplex(1))) == 1
    assert ssets.maps(ssets.simplex(0), ssets.empty()) == []


def test_kan():
    assert is_kan_complex(ssets.simplex(0)).is_yes
    assert is_kan_complex(ssets.boundary(1)).is_yes
    verdict = is_kan_complex(ssets.simplex(1))
    assert verdict.is_no
    assert verdict.witness['p'] == 2
    assert is_kan_fibration(inclusion(ssets.simplex(1), ssets.simplex(1))).is_yes


def test_kan_budget():
    assert is_kan_complex(ssets.simplex(2), budget=3).value == 'bound'


def test_weak_equivalence():
    assert weak_equivalence_verdict(terminal_map(ssets.simplex(2))).is_yes
    assert weak_equivalence_verdict(terminal_map(ssets.horn(1, 2))).is_yes
    assert weak_equivalence_verdict(inclusion(ssets.horn(0, 2), ssets.simplex(2))).is_yes
    verdict = weak_equivalence_verdict(terminal_map(ssets.boundary(1)))
    assert verdict.is_no
    assert verdict.reason == 'pi0 is not preserved bijectively'
    verdict = weak_equivalence_verdict(terminal_map(ssets.boundary(2)))
    assert verdict.is_no
    assert verdict.witness['degree'] == 1
