"""Lifting properties of simplicial maps and prop morphisms, and the morphism classifier.

A verdict is Yes only when every square within the bounds has a lift, No
carries a square without one, and Bound means the search budget ran out.
"""
from collections import namedtuple

from propcalc import ssets
from propcalc.categories import equivalence_verdict, isofibration_verdict
from propcalc.common import Bounds, PropCalcError, Verdict, report
from propcalc.free import gnm_colors, homs, materialize_Gnm
from propcalc.graphs import Biprofile
from propcalc.properads import (PropMorphism, UnderlyingCategory, change_of_objects, pi0_category, pi0_functor,
                                 zero_morphism)
from propcalc.ssets import (Budget, BudgetExhausted, SSetMap, _apply, _json_assignment, default_horn_bound,
                            extensions, is_kan_fibration, weak_equivalence_verdict)


FAMILIES = ('I', 'J', 'C2')

Square = namedtuple('Square', 'i f top bottom')


def _square_json(square):
    return {'i': square.i.name, 'f': square.f.name,
            'top': _json_assignment(square.top), 'bottom': _json_assignment(square.bottom)}


def _budget(budget):
    if isinstance(budget, Budget):
        return budget
    return Budget(budget if budget is not None else ssets.DEFAULT_BUDGET)


def _pinned(i, values):
    """Cells of B fixed by values on A along the nondegenerate images of i; {} when two disagree."""
    fixed = {}
    for a, image in i.assignment.items():
        if image.surj != ssets.identity_surj(i.source.dims[a]):
            continue
        if fixed.setdefault(image.cell, values[a]) != values[a]:
            return {}
    return fixed


def squares(i, f, budget=None):
    """Every commuting square (top, bottom) from i: A -> B to f: X -> Y."""
    A, B = i.source, i.target
    spent = _budget(budget)
    for top in extensions(A, f.source, budget=spent):
        wanted = dict((a, f(top[a])) for a in A.dims)
        for bottom in extensions(B, f.target, fixed=_pinned(i, wanted), budget=spent):
            if all(_apply(bottom, i.assignment[a]) == wanted[a] for a in A.dims):
                yield Square(i, f, top, bottom)


def find_lift(square, budget=None):
    i, f = square.i, square.f
    spent = _budget(budget)

    def lower(cell):
        return square.bottom[cell]
    for lift in extensions(i.target, f.source, fixed=_pinned(i, square.top), over=(f, lower), budget=spent):
        if all(_apply(lift, image) == square.top[a] for a, image in i.assignment.items()):
            return lift
    return None


def boxslash(i, f, budget=None):
    """i ⧄ f: does every commuting square from i to f have a diagonal lift?"""
    if f.is_iso():
        return Verdict.yes('f is an isomorphism')
    spent = _budget(budget)
    count = 0
    try:
        for square in squares(i, f, spent):
            count += 1
            if find_lift(square, spent) is None:
                return Verdict.no('a square from {0} to {1} has no lift'.format(i.name or 'i', f.name or 'f'),
                                  _square_json(square))
    except BudgetExhausted:
        return Verdict.bound('search budget exhausted after {0} squares'.format(count))
    return Verdict.yes('{0} squares, all lift'.format(count))


def generators(family, p_max):
    """(name, inclusion) pairs: ∂Δ[p] ↪ Δ[p] for I, Λ[k,p] ↪ Δ[p] for J."""
    out = []
    if family == 'I':
        for p in range(p_max + 1):
            out.append(('∂Δ[{0}]'.format(p), ssets.inclusion(ssets.boundary(p), ssets.simplex(p))))
    elif family == 'J':
        for p in range(1, p_max + 1):
            for k in range(p + 1):
                out.append(('Λ[{0},{1}]'.format(k, p), ssets.inclusion(ssets.horn(k, p), ssets.simplex(p))))
    else:
        raise ValueError('unknown generator family {0!r}'.format(family))
    return out


def _colors_verdict(f):
    images = set(f.color_map.values())
    missing = [c for c in f.target.colors if c not in images]
    if missing:
        return Verdict.no('not surjective on colors', {'missing': missing})
    return Verdict.yes('surjective on colors')


def rlp_generators(f, family, bounds=None):
    """Right lifting of a prop morphism against the free generators of one family.

    A square against 𝒢_{n,m}[S] -> 𝒢_{n,m}[T] is the same as a square of
    entries, so each non-iso entry map is tested against S ↪ T directly.
    C2 is surjectivity on colors.
    """
    bounds = bounds or Bounds()
    if family == 'C2':
        return _colors_verdict(f)
    spent = Budget(bounds.budget)
    pending = None
    for bp in f.biprofiles():
        m = f.entry_map(bp)
        if m.is_iso():
            continue
        p_max = bounds.horn if bounds.horn is not None else default_horn_bound(m)
        for name, i in generators(family, p_max):
            verdict = boxslash(i, m, spent)
            if verdict.is_no:
                return Verdict.no('{0} does not lift against {1} at {2}'.format(f.name, name, bp),
                                  {'biprofile': str(bp), 'generator': name, 'square': verdict.witness})
            if not verdict.decisive and pending is None:
                pending = Verdict(verdict.value, verdict.reason, {'biprofile': str(bp), 'generator': name})
    if pending is not None:
        return pending
    return Verdict.yes('every entry lifts against {0}'.format(family))


def _entrywise(f, test, reason):
    pending = None
    for bp in f.biprofiles():
        verdict = test(f.entry_map(bp))
        if verdict.is_no:
            return Verdict.no('{0} at {1}'.format(verdict.reason, bp),
                              {'biprofile': str(bp), 'witness': verdict.witness})
        if not verdict.decisive and pending is None:
            pending = Verdict(verdict.value, '{0} at {1}'.format(verdict.reason, bp), {'biprofile': str(bp)})
    return pending or Verdict.yes(reason)


class Classification(namedtuple('Classification', 'W1 W2 F1 F2')):
    """W1: entrywise weak equivalence. W2: π0 U f an equivalence.
    F1: entrywise Kan fibration. F2: π0 U f an isofibration."""

    @property
    def weak_equivalence(self):
        return Verdict.all([self.W1, self.W2], 'weak equivalence')

    @property
    def fibration(self):
        return Verdict.all([self.F1, self.F2], 'fibration')

    def to_json(self):
        return dict((flag, verdict.to_json()) for flag, verdict in zip(self._fields, self))


def _pi0_verdicts(f):
    try:
        F = pi0_functor(f)
    except PropCalcError as e:
        unknown = Verdict.unknown('π0 U is not defined: {0}'.format(e))
        return unknown, unknown
    return equivalence_verdict(F), isofibration_verdict(F)


def classify_morphism(f, bounds=None, flags=('W1', 'W2', 'F1', 'F2')):
    """Classification of f; flags left out are reported Unknown."""
    bounds = bounds or Bounds()
    skipped = Verdict.unknown('not requested')
    W1 = W2 = F1 = F2 = skipped
    if 'W1' in flags:
        W1 = _entrywise(f, weak_equivalence_verdict, 'every entry is a weak equivalence')
    if 'F1' in flags:
        F1 = _entrywise(f, lambda m: is_kan_fibration(m, bounds.horn, bounds.budget),
                        'every entry is a Kan fibration')
    if 'W2' in flags or 'F2' in flags:
        equivalence, isofibration = _pi0_verdicts(f)
        if 'W2' in flags:
            W2 = equivalence
        if 'F2' in flags:
            F2 = isofibration
    return Classification(W1, W2, F1, F2)


def characterize_fibration(f, bounds=None):
    """f is a fibration iff it lifts against J and π0 U f is an isofibration."""
    return Verdict.all([rlp_generators(f, 'J', bounds), _pi0_verdicts(f)[1]], 'lifts against J and isomorphisms')


def local_lifting_equivalence(f, bounds=None):
    """rlp I against (W1 and rlp J) on one morphism; inconclusive if any verdict is not decisive."""
    bounds = bounds or Bounds()
    I = rlp_generators(f, 'I', bounds)
    J = rlp_generators(f, 'J', bounds)
    W1 = classify_morphism(f, bounds, flags=('W1',)).W1
    decisive = I.decisive and J.decisive and W1.decisive
    violations = []
    if decisive and I.is_yes != (W1.is_yes and J.is_yes):
        violations.append({'morphism': f.name, 'I': I.value, 'J': J.value, 'W1': W1.value})
    return report(1 if decisive else 0, violations, decisive=decisive, morphism=f.name,
                  I=I.value, J=J.value, W1=W1.value)


def kan_agreement_check(f, bounds=None):
    """rlp J against entrywise Kan fibrations, and rlp I against entrywise acyclic fibrations."""
    bounds = bounds or Bounds()
    J = rlp_generators(f, 'J', bounds)
    I = rlp_generators(f, 'I', bounds)
    kan = classify_morphism(f, bounds, flags=('W1', 'F1'))
    acyclic = Verdict.all([kan.W1, kan.F1])
    violations = []
    checked = 0
    if J.decisive and kan.F1.decisive:
        checked += 1
        if J.is_yes != kan.F1.is_yes:
            violations.append({'law': 'J', 'morphism': f.name, 'rlp': J.value, 'kan': kan.F1.value})
    if I.decisive and acyclic.decisive:
        checked += 1
        if I.is_yes != acyclic.is_yes:
            violations.append({'law': 'I', 'morphism': f.name, 'rlp': I.value, 'acyclic': acyclic.value})
    return report(checked, violations, morphism=f.name)


def _iso_choices(g):
    """For each color d of the target, a color c and π0 isos g(c) -> d and d -> g(c), as vertices."""
    Q = g.target
    C = pi0_category(UnderlyingCategory(Q))
    out = {}
    for d in Q.colors:
        for c in g.source.colors:
            isos = C.isomorphisms(g.color_map[c], d)
            if isos:
                forward = isos[0]
                out[d] = (c, forward[2], C.inverse(forward)[2])
                break
    return out


def _change_squares(g, f):
    """f_bp ∘ ch_Q == ch_R ∘ f_{bp'} for the change of objects ch along chosen π0 isos.

    bp' recolors each leg d of bp to g(c) for the chosen c ≅ d.
    """
    Q = g.target
    choices = _iso_choices(g)
    checked = 0
    violations = []
    for bp in f.biprofiles():
        if not Q.entry(bp).dims or any(d not in choices for d in bp.colors()):
            continue
        start = Biprofile(tuple(g.color_map[choices[d][0]] for d in bp.inputs),
                          tuple(g.color_map[choices[d][0]] for d in bp.outputs))
        if start.size > Q.arity_bound:
            continue
        ins = [(choices[d][2], d) for d in bp.inputs]
        outs = [(choices[d][1], d) for d in bp.outputs]
        ch_Q = change_of_objects(Q, start, ins, outs)
        ch_R = change_of_objects(f.target, start.map(f.color_map),
                                 [(f(Biprofile((d,), (a,)), ssets.Simplex(x, (0,))).cell, f.color_map[d])
                                  for (x, d), a in zip(ins, start.inputs)],
                                 [(f(Biprofile((a,), (d,)), ssets.Simplex(y, (0,))).cell, f.color_map[d])
                                  for (y, d), a in zip(outs, start.outputs)])
        checked += 1
        left = f.entry_map(bp).compose(ch_Q)
        right = ch_R.compose(f.entry_map(start))
        if left.assignment != right.assignment:
            violations.append({'law': 'change of objects', 'biprofile': str(bp)})
    return checked, violations


def two_of_three_check(g, f, bounds=None, local_only=False):
    """If g and f ∘ g are weak equivalences, so is f.

    local_only tests W1 alone, where the property is expected to fail.
    """
    bounds = bounds or Bounds()
    flags = ('W1',) if local_only else ('W1', 'W2')

    def verdict(h):
        c = classify_morphism(h, bounds, flags)
        return c.W1 if local_only else c.weak_equivalence
    fg = f.compose(g)
    first, composite = verdict(g), verdict(fg)
    extra = {'g': g.name, 'f': f.name, 'local_only': local_only}
    if not (first.decisive and composite.decisive):
        return report(0, [], conclusive=False, premise=None, **extra)
    if not (first.is_yes and composite.is_yes):
        return report(0, [], conclusive=True, premise=False, **extra)
    checked, violations = (0, []) if local_only else _change_squares(g, f)
    result = verdict(f)
    if not result.decisive:
        return report(checked, violations, conclusive=False, premise=True, **extra)
    checked += 1
    if result.is_no:
        violations.append({'law': 'two of three', 'g': g.name, 'f': f.name, 'reason': result.reason,
                           'witness': result.witness})
    return report(checked, violations, conclusive=True, premise=True, **extra)


def local_class_check(pairs, bounds=None):
    """Entrywise weak equivalences compose and cancel on the right: f, f ∘ g in the class gives g."""
    bounds = bounds or Bounds()
    checked = 0
    violations = []
    for g, f in pairs:
        fg = f.compose(g)
        W = dict((name, classify_morphism(h, bounds, ('W1',)).W1) for name, h in (('g', g), ('f', f), ('fg', fg)))
        if W['g'].is_yes and W['f'].is_yes:
            checked += 1
            if W['fg'].is_no:
                violations.append({'law': 'composition', 'g': g.name, 'f': f.name})
        if W['f'].is_yes and W['fg'].is_yes:
            checked += 1
            if W['g'].is_no:
                violations.append({'law': 'right cancellation', 'g': g.name, 'f': f.name})
    return report(checked, violations)


def fold(X, total):
    return SSetMap(total, X, dict(((i, cell), X.point(cell)) for i, cell in total.dims), 'fold')


def retract_check(phi, zero):
    """Z(φ) is a retract of Z(φ ⊔ φ); W1 of the doubled map Yes makes W1 of Z(φ) Yes.

    zero(X) builds the zero properad on X and must return one object per X.
    """
    X, Y = phi.source, phi.target
    XX, YY = ssets.coproduct(X, X), ssets.coproduct(Y, Y)
    doubled = ssets.coproduct_map(XX, YY, [(0, 0, phi), (1, 1, phi)])
    ZX, ZY, ZXX, ZYY = zero(X), zero(Y), zero(XX), zero(YY)
    f = zero_morphism(ZX, ZY, phi)
    ff = zero_morphism(ZXX, ZYY, doubled)
    inject_X = zero_morphism(ZX, ZXX, ssets.injection([X, X], XX, 0))
    inject_Y = zero_morphism(ZY, ZYY, ssets.injection([Y, Y], YY, 0))
    fold_X = zero_morphism(ZXX, ZX, fold(X, XX))
    fold_Y = zero_morphism(ZYY, ZY, fold(Y, YY))
    checked = 0
    violations = []
    for bp in f.biprofiles():
        checked += 3
        if fold_X.compose(inject_X).entry_map(bp).assignment != PropMorphism.identity(ZX).entry_map(bp).assignment:
            violations.append({'law': 'retraction', 'side': 'source', 'biprofile': str(bp)})
        if ff.compose(inject_X).entry_map(bp).assignment != inject_Y.compose(f).entry_map(bp).assignment:
            violations.append({'law': 'square', 'side': 'left', 'biprofile': str(bp)})
        if f.compose(fold_X).entry_map(bp).assignment != fold_Y.compose(ff).entry_map(bp).assignment:
            violations.append({'law': 'square', 'side': 'right', 'biprofile': str(bp)})
    big = classify_morphism(ff, flags=('W1',)).W1
    small = classify_morphism(f, flags=('W1',)).W1
    if big.is_yes:
        checked += 1
        if small.is_no:
            violations.append({'law': 'retract', 'map': phi.name, 'reason': small.reason})
    return report(checked, violations, doubled=big.value, retract=small.value)


def underlying_map(f, n=1, m=1):
    """U_{n,m} f: the coproduct over biprofiles of arity (n,m) of the entry maps of f."""
    source = [bp for bp in f.biprofiles() if bp.arity == (n, m)]
    target = [bp for bp in f.target.biprofiles() if bp.arity == (n, m)]
    X = ssets.coproduct(*[f.source.entry(bp) for bp in source])
    Y = ssets.coproduct(*[f.target.entry(bp) for bp in target])
    pieces = [(i, target.index(bp.map(f.color_map)), f.entry_map(bp)) for i, bp in enumerate(source)]
    return ssets.coproduct_map(X, Y, pieces)


def _hom_lift(i, f, gen, top, bottom, lifts):
    """A free hom 𝒢[B] -> P restricting to top along i and lying over bottom."""
    for h in lifts:
        if h.color_map != top.color_map:
            continue
        lift = h.generator_maps[gen]
        if lift.compose(i).assignment != top.generator_maps[gen].assignment:
            continue
        bp = gen.map(h.color_map)
        if f.entry_map(bp).compose(lift).assignment == bottom.generator_maps[gen].assignment:
            return h
    return None


def free_lifting(i, f, n=1, m=1):
    """L i ⧄ f with L i: 𝒢_{n,m}[A] -> 𝒢_{n,m}[B], by enumerating homs out of both free props."""
    P, Q = f.source, f.target
    GA = materialize_Gnm(n, m, i.source, P.scheme, N=1)
    GB = materialize_Gnm(n, m, i.target, P.scheme, N=1)
    ins, outs = gnm_colors(n, m)
    gen = Biprofile(ins, outs)
    tops = homs(GA, P)
    bottoms = homs(GB, Q)
    lifts = homs(GB, P)
    count = 0
    for top in tops:
        bp = gen.map(top.color_map)
        over = f.entry_map(bp).compose(top.generator_maps[gen]).assignment
        for bottom in bottoms:
            if bottom.color_map != dict((c, f.color_map[top.color_map[c]]) for c in top.color_map):
                continue
            if bottom.generator_maps[gen].compose(i).assignment != over:
                continue
            count += 1
            if _hom_lift(i, f, gen, top, bottom, lifts) is None:
                return Verdict.no('a square of free homs has no lift', {'colors': top.color_map})
    return Verdict.yes('{0} squares of free homs, all lift'.format(count))


def rlp_adjunction_check(f, K, n=1, m=1, bounds=None):
    """f lies in U⁻¹(⧄K) exactly when f ⧄ L K, on one instance."""
    bounds = bounds or Bounds()
    left = boxslash(K, underlying_map(f, n, m), bounds.budget)
    right = free_lifting(K, f, n, m)
    violations = []
    checked = 0
    if left.decisive and right.decisive:
        checked = 1
        if left.is_yes != right.is_yes:
            violations.append({'morphism': f.name, 'generator': K.source.name, 'underlying': left.value,
                               'free': right.value})
    return report(checked, violations, morphism=f.name, underlying=left.value, free=right.value)


def bounds_monotonicity_check(f, bounds_list):
    """Verdicts of f stay put as bounds_list grows.

    A No never becomes Yes. F1 may go from Yes to No as the horn bound
    grows; every other flag must not change.
    """
    seen = {}
    violations = []
    checked = 0
    for bounds in bounds_list:
        for flag, verdict in zip(Classification._fields, classify_morphism(f, bounds)):
            if not verdict.decisive:
                continue
            checked += 1
            before = seen.get(flag)
            if before == Verdict.NO and verdict.is_yes or (flag != 'F1' and before not in (None, verdict.value)):
                violations.append({'flag': flag, 'morphism': f.name, 'values': [before, verdict.value]})
            seen[flag] = verdict.value
    return report(checked, violations, morphism=f.name)
