"""The shipped corpus of small props and morphisms used by the property suites.

Zero properads are cached per simplicial set, so morphisms built from
maps that share a space compose.
"""
from propcalc import ssets
from propcalc.categories import FiniteCategory, FiniteFunctor
from propcalc.common.decorators import memoize
from propcalc.graphs import Scheme
from propcalc.properads import (PropMorphism, category_morphism, category_properad, constant, endomorphism_prop,
                                initial_morphism, terminal_prop, zero_morphism, zero_properad)
from propcalc.ssets import Simplex, SSetMap


def _constant_map(X, Y, vertex):
    return SSetMap(X, Y, dict((cell, Simplex(vertex, (0,) * (k + 1))) for cell, k in X.dims.items()))


class Corpus(object):
    """Named simplicial sets, maps between them and the morphisms of zero properads they induce."""

    space_names = ('∅', 'Δ[0]', 'Δ[1]', 'Δ[2]', '∂Δ[1]', '∂Δ[2]', 'Λ[0,2]', 'Λ[1,2]')

    def __init__(self, scheme=Scheme.PROPERAD):
        self.scheme = scheme

    @memoize
    def space(self, name):
        builders = {
            '∅': ssets.empty,
            'Δ[0]': lambda: ssets.simplex(0),
            'Δ[1]': lambda: ssets.simplex(1),
            'Δ[2]': lambda: ssets.simplex(2),
            '∂Δ[1]': lambda: ssets.boundary(1),
            '∂Δ[2]': lambda: ssets.boundary(2),
            'Λ[0,2]': lambda: ssets.horn(0, 2),
            'Λ[1,2]': lambda: ssets.horn(1, 2),
        }
        return builders[name]()

    @memoize
    def _zero(self, X):
        return zero_properad(X, self.scheme)

    def zero(self, X):
        """Z(X), one object per simplicial set."""
        return self._zero(X)

    @memoize
    def maps(self):
        """(name, source name, target name, map) for every shipped simplicial map."""
        S = self.space
        out = []
        for name in self.space_names:
            out.append(('id ' + name, name, name, SSetMap.identity(S(name))))
        for name in ('Δ[1]', 'Δ[2]', '∂Δ[1]', '∂Δ[2]', 'Λ[0,2]', 'Λ[1,2]'):
            out.append((name + ' -> Δ[0]', name, 'Δ[0]', ssets.terminal_map(S(name), S('Δ[0]'))))
        for source, target in (('Λ[0,2]', 'Δ[2]'), ('Λ[1,2]', 'Δ[2]'), ('∂Δ[1]', 'Δ[1]'), ('∂Δ[2]', 'Δ[2]'),
                               ('Δ[1]', 'Δ[2]'), ('Δ[0]', 'Δ[1]'), ('Δ[0]', '∂Δ[1]'), ('∅', 'Δ[0]')):
            out.append((source + ' ↪ ' + target, source, target, ssets.inclusion(S(source), S(target))))
        out.append(('vertex 1 of Δ[1]', 'Δ[0]', 'Δ[1]',
                    SSetMap(S('Δ[0]'), S('Δ[1]'), {(0,): Simplex((1,), (0,))})))
        out.append(('s1: Δ[2] -> Δ[1]', 'Δ[2]', 'Δ[1]',
                    ssets.simplex_map(2, S('Δ[1]'), Simplex((0, 1), (0, 1, 1)), S('Δ[2]'))))
        out.append(('swap ∂Δ[1]', '∂Δ[1]', '∂Δ[1]',
                    SSetMap(S('∂Δ[1]'), S('∂Δ[1]'), {(0,): Simplex((1,), (0,)), (1,): Simplex((0,), (0,))})))
        out.append(('constant 0: Δ[1] -> Δ[1]', 'Δ[1]', 'Δ[1]', _constant_map(S('Δ[1]'), S('Δ[1]'), (0,))))
        out.append(('constant 0: ∂Δ[1] -> Δ[1]', '∂Δ[1]', 'Δ[1]', _constant_map(S('∂Δ[1]'), S('Δ[1]'), (0,))))
        for name, _, _, phi in out:
            phi.name = name
            phi.check()
        return out

    def sset_map(self, name):
        for map_name, _, _, phi in self.maps():
            if map_name == name:
                return phi
        raise KeyError(name)

    @memoize
    def zero_morphism(self, name):
        for map_name, source, target, phi in self.maps():
            if map_name == name:
                f = zero_morphism(self.zero(self.space(source)), self.zero(self.space(target)), phi)
                f.name = 'Z({0})'.format(name)
                return f
        raise KeyError(name)

    def zero_morphisms(self):
        return [self.zero_morphism(name) for name, _, _, _ in self.maps()]

    @memoize
    def endomorphism(self, size, scheme=Scheme.PROP):
        return endomorphism_prop(range(size), scheme, arity_bound=2)

    @memoize
    def category(self, objects):
        return category_properad(FiniteCategory.chaotic(objects), self.scheme)

    @memoize
    def other_morphisms(self):
        """Identities of End(2) and the terminal properad, End(2) -> End(1), and chaotic-category functors."""
        E2, E1 = self.endomorphism(2), self.endomorphism(1)

        def collapse(bp, X, Y):
            (point,) = Y.cells(0)
            return dict((cell, constant(point, 0)) for cell in X.dims)
        quotient = PropMorphism(E2, E1, {'c': 'c'}, rule=collapse, name='End(2) -> End(1)')
        one, two = self.category(('a',)), self.category(('a', 'b'))
        C1, C2 = one.composer.category, two.composer.category
        include = FiniteFunctor(C1, C2, {'a': 'a'}, {('a', 'a'): ('a', 'a')}, 'chaotic(a) ↪ chaotic(a,b)')
        squash = FiniteFunctor(C2, C1, {'a': 'a', 'b': 'a'},
                               dict((f, ('a', 'a')) for f in C2.morphisms()), 'chaotic(a,b) -> chaotic(a)')
        return [PropMorphism.identity(E2), PropMorphism.identity(terminal_prop(self.scheme, arity_bound=2)),
                quotient, category_morphism(one, two, include), category_morphism(two, one, squash)]

    def morphisms(self):
        return self.zero_morphisms() + self.other_morphisms()

    pair_names = (
        ('Δ[0] ↪ Δ[1]', 'Δ[1] -> Δ[0]'),
        ('vertex 1 of Δ[1]', 'Δ[1] -> Δ[0]'),
        ('Δ[1] ↪ Δ[2]', 'Δ[2] -> Δ[0]'),
        ('Δ[1] ↪ Δ[2]', 's1: Δ[2] -> Δ[1]'),
        ('Λ[1,2] ↪ Δ[2]', 'Δ[2] -> Δ[0]'),
        ('Λ[0,2] ↪ Δ[2]', 'Δ[2] -> Δ[0]'),
        ('Λ[1,2] ↪ Δ[2]', 's1: Δ[2] -> Δ[1]'),
        ('Δ[0] ↪ Δ[1]', 'constant 0: Δ[1] -> Δ[1]'),
        ('id Δ[1]', 'Δ[1] -> Δ[0]'),
        ('swap ∂Δ[1]', 'swap ∂Δ[1]'),
        ('s1: Δ[2] -> Δ[1]', 'Δ[1] -> Δ[0]'),
        ('Δ[0] ↪ Δ[1]', 'id Δ[1]'),
        ('id Δ[0]', 'id Δ[0]'),
        ('Λ[1,2] -> Δ[0]', 'id Δ[0]'),
    )

    def pairs(self):
        """Composable (g, f) with g and f ∘ g weak equivalences."""
        return [(self.zero_morphism(g), self.zero_morphism(f)) for g, f in self.pair_names]

    def mixed_pairs(self):
        """Composable pairs where the premise of two out of three fails."""
        return [(self.zero_morphism(g), self.zero_morphism(f)) for g, f in (
            ('Δ[0] ↪ ∂Δ[1]', '∂Δ[1] -> Δ[0]'),
            ('∂Δ[1] ↪ Δ[1]', 'Δ[1] -> Δ[0]'),
            ('∅ ↪ Δ[0]', 'Δ[0] ↪ Δ[1]'),
        )]

    def remark_triple(self):
        """(g, f): initial -> Z(∂Δ[1]) -> Z(Δ[0]); g and f ∘ g are entrywise equivalences and f is not."""
        g = initial_morphism(self.zero(self.space('∂Δ[1]')))
        return g, self.zero_morphism('∂Δ[1] -> Δ[0]')

    def retract_maps(self):
        return [self.sset_map(name) for name in ('Δ[1] -> Δ[0]', 'Δ[0] ↪ Δ[1]', '∂Δ[1] -> Δ[0]', 'Λ[1,2] ↪ Δ[2]')]

    def horn_inclusions(self, p_max=2):
        return [ssets.inclusion(ssets.horn(k, p), ssets.simplex(p)) for p in range(1, p_max + 1) for k in range(p + 1)]
