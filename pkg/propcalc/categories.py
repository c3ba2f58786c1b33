"""Finite categories and functors between them.

Morphisms are hashable ids, each belonging to exactly one hom set.
Composition is a table keyed by (g, f) meaning g ∘ f.
"""
import itertools

from propcalc.common import ValidationError, Verdict, report, sort_key
from propcalc.graphs import freeze


class FiniteCategory(object):
    def __init__(self, objects, homs, composition, identities, name=''):
        self.objects = tuple(objects)
        self.homs = dict(((a, b), tuple(homs.get((a, b), ()))) for a in self.objects for b in self.objects)
        self.composition = dict(composition)
        self.identities = dict(identities)
        self.name = name
        self._ends = {}
        for (a, b), arrows in self.homs.items():
            for f in arrows:
                if f in self._ends:
                    raise ValidationError('morphism {0!r} lies in two hom sets'.format(f))
                self._ends[f] = (a, b)

    def __repr__(self):
        return 'FiniteCategory({0}, {1} objects, {2} morphisms)'.format(
            self.name or '?', len(self.objects), len(self._ends))

    def hom(self, a, b):
        return self.homs[(a, b)]

    def source(self, f):
        return self._ends[f][0]

    def target(self, f):
        return self._ends[f][1]

    def morphisms(self):
        return sorted(self._ends, key=sort_key)

    def compose(self, g, f):
        """g ∘ f."""
        if self.target(f) != self.source(g):
            raise ValueError('{0!r} and {1!r} are not composable'.format(g, f))
        return self.composition[(g, f)]

    def check_laws(self):
        checked = 0
        violations = []
        for a in self.objects:
            if self.identities.get(a) not in self.homs[(a, a)]:
                violations.append({'law': 'identity', 'object': a})
        if violations:
            return report(len(self.objects), violations)
        for f in self.morphisms():
            a, b = self._ends[f]
            checked += 1
            if self.composition.get((self.identities[b], f)) != f or \
                    self.composition.get((f, self.identities[a])) != f:
                violations.append({'law': 'unit', 'morphism': f})
        for a, b, c in itertools.product(self.objects, repeat=3):
            for f in self.homs[(a, b)]:
                for g in self.homs[(b, c)]:
                    checked += 1
                    if self.composition.get((g, f)) not in self.homs[(a, c)]:
                        violations.append({'law': 'closure', 'morphisms': [g, f]})
        if violations:
            return report(checked, violations)
        for a, b, c, d in itertools.product(self.objects, repeat=4):
            for f in self.homs[(a, b)]:
                for g in self.homs[(b, c)]:
                    for h in self.homs[(c, d)]:
                        checked += 1
                        if self.compose(h, self.compose(g, f)) != self.compose(self.compose(h, g), f):
                            violations.append({'law': 'associativity', 'morphisms': [h, g, f]})
        return report(checked, violations)

    def inverse(self, f):
        a, b = self._ends[f]
        for g in self.homs[(b, a)]:
            if self.compose(g, f) == self.identities[a] and self.compose(f, g) == self.identities[b]:
                return g
        return None

    def is_iso(self, f):
        return self.inverse(f) is not None

    def isomorphisms(self, a=None, b=None):
        out = []
        for f in self.morphisms():
            if a is not None and self.source(f) != a:
                continue
            if b is not None and self.target(f) != b:
                continue
            if self.is_iso(f):
                out.append(f)
        return out

    def to_json(self):
        return {
            'name': self.name,
            'objects': list(self.objects),
            'homs': [[a, b, list(self.homs[(a, b)])] for a in self.objects for b in self.objects
                     if self.homs[(a, b)]],
            'identities': [[a, self.identities[a]] for a in self.objects],
            'composition': [[g, f, h] for (g, f), h in sorted(self.composition.items(), key=sort_key)],
        }

    @classmethod
    def discrete(cls, objects):
        objects = tuple(objects)
        return cls(objects, dict(((a, a), [('id', a)]) for a in objects),
                   dict(((('id', a), ('id', a)), ('id', a)) for a in objects),
                   dict((a, ('id', a)) for a in objects), 'discrete')

    @classmethod
    def chaotic(cls, objects):
        """Exactly one morphism between any two objects."""
        objects = tuple(objects)
        homs = dict(((a, b), [(a, b)]) for a in objects for b in objects)
        composition = {}
        for a, b, c in itertools.product(objects, repeat=3):
            composition[((b, c), (a, b))] = (a, c)
        return cls(objects, homs, composition, dict((a, (a, a)) for a in objects), 'chaotic')

    @classmethod
    def from_monoid(cls, elements, product, unit, obj='*'):
        """One object; product(x, y) is x ∘ y."""
        elements = tuple(elements)
        composition = dict(((x, y), product(x, y)) for x in elements for y in elements)
        return cls([obj], {(obj, obj): elements}, composition, {obj: unit}, 'monoid')


class FiniteFunctor(object):
    def __init__(self, source, target, object_map, morphism_map, name=''):
        self.source = source
        self.target = target
        self.object_map = dict(object_map)
        self.morphism_map = dict(morphism_map)
        self.name = name

    def __repr__(self):
        return 'FiniteFunctor({0}: {1} -> {2})'.format(self.name or '?', self.source.name, self.target.name)

    def __call__(self, f):
        return self.morphism_map[f]

    @classmethod
    def identity(cls, C):
        return cls(C, C, dict((a, a) for a in C.objects), dict((f, f) for f in C.morphisms()), 'id')

    def compose(self, other):
        """self ∘ other."""
        return FiniteFunctor(other.source, self.target,
                             dict((a, self.object_map[b]) for a, b in other.object_map.items()),
                             dict((f, self.morphism_map[g]) for f, g in other.morphism_map.items()))

    def check(self):
        checked = 0
        violations = []
        C, D = self.source, self.target
        for f in C.morphisms():
            checked += 1
            image = self.morphism_map.get(f)
            a, b = C.source(f), C.target(f)
            if image is None or image not in D.homs.get((self.object_map[a], self.object_map[b]), ()):
                violations.append({'law': 'ends', 'morphism': f})
        if violations:
            return report(checked, violations)
        for a in C.objects:
            checked += 1
            if self(C.identities[a]) != D.identities[self.object_map[a]]:
                violations.append({'law': 'identity', 'object': a})
        for a, b, c in itertools.product(C.objects, repeat=3):
            for f in C.homs[(a, b)]:
                for g in C.homs[(b, c)]:
                    checked += 1
                    if self(C.compose(g, f)) != D.compose(self(g), self(f)):
                        violations.append({'law': 'composition', 'morphisms': [g, f]})
        return report(checked, violations)


def fullness_witness(F):
    C, D = F.source, F.target
    for a in C.objects:
        for b in C.objects:
            image = set(F(f) for f in C.homs[(a, b)])
            for h in D.hom(F.object_map[a], F.object_map[b]):
                if h not in image:
                    return {'objects': [a, b], 'missing': h}
    return None


def faithfulness_witness(F):
    C = F.source
    for a in C.objects:
        for b in C.objects:
            seen = {}
            for f in C.homs[(a, b)]:
                if F(f) in seen:
                    return {'objects': [a, b], 'identified': [seen[F(f)], f]}
                seen[F(f)] = f
    return None


def essential_surjectivity_witness(F):
    D = F.target
    images = set(F.object_map.values())
    for b in D.objects:
        if b in images:
            continue
        if not any(D.isomorphisms(a, b) for a in images):
            return {'object': b}
    return None


def isofibration_witness(F):
    """An iso h: F(e) -> b with no iso g: e -> e' over it, or None."""
    C, D = F.source, F.target
    for e in C.objects:
        lifted = set(F(g) for g in C.isomorphisms(a=e))
        for h in D.isomorphisms(a=F.object_map[e]):
            if h not in lifted:
                return {'object': e, 'iso': h}
    return None


def is_isofibration(F):
    return isofibration_witness(F) is None


def is_cat_equivalence(F):
    return (fullness_witness(F) is None and faithfulness_witness(F) is None and
            essential_surjectivity_witness(F) is None)


def isofibration_verdict(F):
    witness = isofibration_witness(F)
    if witness is None:
        return Verdict.yes('isomorphisms lift')
    return Verdict.no('an isomorphism does not lift', witness)


def equivalence_verdict(F):
    for reason, finder in (('not full', fullness_witness), ('not faithful', faithfulness_witness),
                           ('not essentially surjective', essential_surjectivity_witness)):
        witness = finder(F)
        if witness is not None:
            return Verdict.no(reason, witness)
    return Verdict.yes('fully faithful and essentially surjective')


def category_from_json(data):
    try:
        objects = [freeze(a) for a in data['objects']]
        homs = dict(((freeze(a), freeze(b)), [freeze(f) for f in arrows]) for a, b, arrows in data['homs'])
        identities = dict((freeze(a), freeze(f)) for a, f in data['identities'])
        composition = dict(((freeze(g), freeze(f)), freeze(h)) for g, f, h in data['composition'])
    except (KeyError, TypeError, ValueError) as e:
        raise ValidationError('malformed category JSON: {0!r}'.format(e))
    category = FiniteCategory(objects, homs, composition, identities, data.get('name', ''))
    problems = category.check_laws()['violations']
    if problems:
        raise ValidationError('category laws fail', [repr(p) for p in problems])
    return category
