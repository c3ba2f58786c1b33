"""Finitely presented simplicial sets and maps between them.

A simplicial set is given by its nondegenerate cells and their faces. Every
simplex, degenerate or not, is a ``Simplex(cell, surj)``: a nondegenerate
cell of dimension k and a monotone surjection [n] -> [k] written as the
tuple of its values. Faces of degenerate simplices come from the
epi-mono factorisation of the composite with a coface map.
"""
from collections import namedtuple
import itertools

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from propcalc.common import UnionFind, ValidationError, Verdict, sort_key
from propcalc.common.decorators import memoize
from propcalc.graphs import freeze


DEFAULT_BUDGET = 200000

Simplex = namedtuple('Simplex', 'cell surj')
HomologyGroup = namedtuple('HomologyGroup', 'rank torsion')
Components = namedtuple('Components', 'classes index')


def identity_surj(k):
    return tuple(range(k + 1))


def surjections(n, k):
    """Monotone surjections [n] -> [k] as value tuples."""
    for steps in itertools.combinations(range(1, n + 1), k):
        values = []
        level = 0
        for j in range(n + 1):
            if level < k and j == steps[level]:
                level += 1
            values.append(level)
        yield tuple(values)


def simplex_dim(s):
    return len(s.surj) - 1


def is_degenerate(s):
    return len(set(s.surj)) != len(s.surj)


class FinSimplicialSet(object):
    def __init__(self, cells, faces=None, name=''):
        self.dims = dict(cells)
        faces = faces or {}
        self.faces = dict((cell, tuple(Simplex(*f) for f in faces.get(cell, ()))) for cell in self.dims)
        self.name = name

    def __repr__(self):
        return 'FinSimplicialSet({0}, {1} cells)'.format(self.name or '?', len(self.dims))

    def __len__(self):
        return len(self.dims)

    def __eq__(self, other):
        return isinstance(other, FinSimplicialSet) and self.dims == other.dims and self.faces == other.faces

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(frozenset(self.dims.items()))

    @property
    def dim(self):
        return max(self.dims.values()) if self.dims else -1

    @memoize
    def cells(self, n):
        return tuple(sorted((c for c, d in self.dims.items() if d == n), key=sort_key))

    def all_cells(self):
        return tuple(c for n in range(self.dim + 1) for c in self.cells(n))

    def point(self, cell):
        """The nondegenerate simplex of a cell."""
        return Simplex(cell, identity_surj(self.dims[cell]))

    @memoize
    def restrict(self, cell, subset):
        """The face of a nondegenerate cell spanned by the sorted vertex subset."""
        k = self.dims[cell]
        if len(subset) == k + 1:
            return self.point(cell)
        missing = max(i for i in range(k + 1) if i not in subset)
        shifted = tuple(j if j < missing else j - 1 for j in subset)
        return self.restrict_simplex(self.faces[cell][missing], shifted)

    def restrict_simplex(self, s, subset):
        composite = tuple(s.surj[j] for j in subset)
        image = tuple(sorted(set(composite)))
        base = self.restrict(s.cell, image)
        return Simplex(base.cell, tuple(base.surj[image.index(x)] for x in composite))

    def face(self, s, i):
        n = simplex_dim(s)
        return self.restrict_simplex(s, tuple(j for j in range(n + 1) if j != i))

    def degeneracy(self, s, i):
        return Simplex(s.cell, s.surj[:i + 1] + s.surj[i:])

    def vertices_of(self, s):
        return tuple(self.restrict_simplex(s, (j,)).cell for j in range(simplex_dim(s) + 1))

    @memoize
    def simplices(self, n):
        """All n-simplices, degenerate ones included."""
        out = []
        for k in range(min(n, self.dim) + 1):
            for cell in self.cells(k):
                for surj in surjections(n, k):
                    out.append(Simplex(cell, surj))
        return tuple(out)

    @memoize
    def by_faces(self, n):
        index = {}
        for s in self.simplices(n):
            index.setdefault(tuple(self.face(s, i) for i in range(n + 1)), []).append(s)
        return index

    def is_delta_like(self):
        return all(not is_degenerate(f) for faces in self.faces.values() for f in faces)

    def validate(self):
        problems = []
        for cell, k in sorted(self.dims.items(), key=lambda item: (item[1], sort_key(item[0]))):
            faces = self.faces.get(cell, ())
            if k == 0:
                if faces:
                    problems.append('vertex {0!r} has faces'.format(cell))
                continue
            if len(faces) != k + 1:
                problems.append('cell {0!r} of dim {1} has {2} faces'.format(cell, k, len(faces)))
                continue
            for i, f in enumerate(faces):
                if f.cell not in self.dims:
                    problems.append('face {0} of {1!r} is unknown cell {2!r}'.format(i, cell, f.cell))
                elif len(f.surj) != k or tuple(sorted(f.surj)) != f.surj or \
                        set(f.surj) != set(range(self.dims[f.cell] + 1)):
                    problems.append('face {0} of {1!r} has a bad degeneracy {2!r}'.format(i, cell, f.surj))
        if problems:
            return problems
        for cell, k in self.dims.items():
            if k < 2:
                continue
            top = self.point(cell)
            for j in range(k + 1):
                for i in range(j):
                    try:
                        left = self.face(self.face(top, j), i)
                        right = self.face(self.face(top, i), j - 1)
                    except (KeyError, ValueError) as e:
                        problems.append('faces of {0!r} cannot be evaluated: {1!r}'.format(cell, e))
                        continue
                    if left != right:
                        problems.append('d{0} d{1} != d{2} d{0} on {3!r}'.format(i, j, j - 1, cell))
        return problems

    def check(self):
        problems = self.validate()
        if problems:
            raise ValidationError('invalid simplicial set {0}'.format(self.name), problems)
        return self

    def subset(self, cells, name=''):
        cells = set(cells)
        return FinSimplicialSet(dict((c, self.dims[c]) for c in cells),
                                dict((c, self.faces[c]) for c in cells), name or self.name)

    def to_json(self):
        return {
            'name': self.name,
            'cells': [{'id': c, 'dim': self.dims[c], 'faces': [[f.cell, list(f.surj)] for f in self.faces[c]]}
                      for c in self.all_cells()],
        }

    @classmethod
    def from_json(cls, data):
        try:
            cells = {}
            faces = {}
            for entry in data['cells']:
                cell = freeze(entry['id'])
                cells[cell] = entry['dim']
                faces[cell] = [Simplex(freeze(f[0]), tuple(f[1])) for f in entry.get('faces', [])]
        except (KeyError, TypeError, IndexError) as e:
            raise ValidationError('malformed simplicial set JSON: {0!r}'.format(e))
        return cls(cells, faces, data.get('name', '')).check()


def _subsets_of_simplex(p, keep):
    cells = {}
    faces = {}
    for size in range(1, p + 2):
        for subset in itertools.combinations(range(p + 1), size):
            if keep(subset):
                cells[subset] = size - 1
                if size > 1:
                    faces[subset] = [Simplex(subset[:i] + subset[i + 1:], identity_surj(size - 2))
                                     for i in range(size)]
    return cells, faces


def simplex(p):
    """Δ[p]: cells are the nonempty vertex subsets of [p]."""
    if p < 0:
        raise ValidationError('simplex dimension must be >= 0, got {0}'.format(p))
    cells, faces = _subsets_of_simplex(p, lambda subset: True)
    return FinSimplicialSet(cells, faces, 'Δ[{0}]'.format(p))


def boundary(p):
    if p < 0:
        raise ValidationError('boundary dimension must be >= 0, got {0}'.format(p))
    cells, faces = _subsets_of_simplex(p, lambda subset: len(subset) < p + 1)
    return FinSimplicialSet(cells, faces, '∂Δ[{0}]'.format(p))


def horn(k, p):
    if p < 1 or not 0 <= k <= p:
        raise ValidationError('horn needs 0 <= k <= p and p >= 1, got k={0} p={1}'.format(k, p))
    missing = tuple(i for i in range(p + 1) if i != k)
    cells, faces = _subsets_of_simplex(p, lambda subset: len(subset) < p + 1 and subset != missing)
    return FinSimplicialSet(cells, faces, 'Λ[{0},{1}]'.format(k, p))


def point(cell='*'):
    return FinSimplicialSet({cell: 0}, {}, 'pt')


def discrete(cells, name=''):
    return FinSimplicialSet(dict((c, 0) for c in cells), {}, name or 'discrete')


def empty():
    return FinSimplicialSet({}, {}, '∅')


def _jointly_nondegenerate(combo):
    n = simplex_dim(combo[0])
    return not any(all(s.surj[i] == s.surj[i + 1] for s in combo) for i in range(n))


def normalize(combo):
    """Split a tuple of n-simplices into (jointly nondegenerate tuple, surjection)."""
    n = simplex_dim(combo[0])
    surj = [0]
    for i in range(n):
        merged = all(s.surj[i] == s.surj[i + 1] for s in combo)
        surj.append(surj[-1] if merged else surj[-1] + 1)
    reps = [surj.index(level) for level in range(surj[-1] + 1)]
    reduced = tuple(Simplex(s.cell, tuple(s.surj[r] for r in reps)) for s in combo)
    return Simplex(reduced, tuple(surj))


def product(*factors):
    """Categorical product; cells are tuples of factor simplices with no common degeneracy."""
    if not factors:
        return FinSimplicialSet({(): 0}, {}, 'pt')
    name = ' × '.join(X.name for X in factors)
    if any(not X.dims for X in factors):
        return FinSimplicialSet({}, {}, name)
    cells = {}
    for n in range(sum(X.dim for X in factors) + 1):
        for combo in itertools.product(*(X.simplices(n) for X in factors)):
            if _jointly_nondegenerate(combo):
                cells[tuple(combo)] = n
    faces = {}
    for cell, n in cells.items():
        if n:
            faces[cell] = [normalize(tuple(X.face(s, i) for X, s in zip(factors, cell))) for i in range(n + 1)]
    return FinSimplicialSet(cells, faces, name)


def projection(prod, factors, i):
    if not factors:
        raise ValueError('the empty product has no projections')
    return SSetMap(prod, factors[i], dict((cell, cell[i]) for cell in prod.dims))


def pairing(source, prod, maps):
    """The map source -> prod with the given components."""
    assignment = {}
    for cell in source.dims:
        if maps:
            assignment[cell] = normalize(tuple(m.assignment[cell] for m in maps))
        else:
            assignment[cell] = Simplex((), (0,) * (source.dims[cell] + 1))
    return SSetMap(source, prod, assignment)


def coproduct(*parts):
    cells = {}
    faces = {}
    for i, X in enumerate(parts):
        for cell, k in X.dims.items():
            cells[(i, cell)] = k
            faces[(i, cell)] = [Simplex((i, f.cell), f.surj) for f in X.faces[cell]]
    return FinSimplicialSet(cells, faces, ' ⊔ '.join(X.name for X in parts) or '∅')


def injection(parts, total, i):
    return SSetMap(parts[i], total, dict((cell, total.point((i, cell))) for cell in parts[i].dims))


def coproduct_map(source, target, pieces):
    """pieces: (i, j, f) sending summand i of source into summand j of target."""
    assignment = {}
    for i, j, f in pieces:
        for cell, image in f.assignment.items():
            assignment[(i, cell)] = Simplex((j, image.cell), image.surj)
    return SSetMap(source, target, assignment)


class SSetMap(object):
    def __init__(self, source, target, assignment, name=''):
        self.source = source
        self.target = target
        self.assignment = dict((cell, Simplex(*s)) for cell, s in assignment.items())
        self.name = name

    def __repr__(self):
        return 'SSetMap({0}: {1} -> {2})'.format(self.name or '?', self.source.name, self.target.name)

    def __call__(self, s):
        image = self.assignment[s.cell]
        return Simplex(image.cell, tuple(image.surj[x] for x in s.surj))

    def __eq__(self, other):
        return (isinstance(other, SSetMap) and self.assignment == other.assignment and
                self.source == other.source and self.target == other.target)

    def __ne__(self, other):
        return not self == other

    __hash__ = object.__hash__

    @classmethod
    def identity(cls, X):
        return cls(X, X, dict((cell, X.point(cell)) for cell in X.dims), 'id')

    def compose(self, other):
        """self ∘ other."""
        return SSetMap(other.source, self.target,
                       dict((cell, self(image)) for cell, image in other.assignment.items()))

    def validate(self):
        problems = []
        for cell in self.source.all_cells():
            if cell not in self.assignment:
                problems.append('cell {0!r} is not mapped'.format(cell))
                continue
            image = self.assignment[cell]
            k = self.source.dims[cell]
            if image.cell not in self.target.dims or simplex_dim(image) != k:
                problems.append('cell {0!r} goes to a bad simplex {1!r}'.format(cell, image))
                continue
            for i in range(k + 1 if k else 0):
                if self(self.source.faces[cell][i]) != self.target.face(image, i):
                    problems.append('map does not commute with d{0} on {1!r}'.format(i, cell))
        return problems

    def check(self):
        problems = self.validate()
        if problems:
            raise ValidationError('invalid simplicial map {0}'.format(self.name), problems)
        return self

    def is_iso(self):
        images = [self.assignment[c] for c in self.source.dims]
        if any(is_degenerate(s) for s in images):
            return False
        cells = set(s.cell for s in images)
        return len(cells) == len(images) == len(self.target.dims)

    def is_injective_on_cells(self):
        images = [self.assignment[c] for c in self.source.dims]
        return not any(is_degenerate(s) for s in images) and len(set(s.cell for s in images)) == len(images)

    def image_cells(self):
        return set(s.cell for s in self.assignment.values())

    @memoize
    def fiber(self, n):
        index = {}
        for s in self.source.simplices(n):
            index.setdefault(self(s), []).append(s)
        return index

    def restrict(self, source, target):
        return SSetMap(source, target, dict((c, self.assignment[c]) for c in source.dims), self.name)

    def to_json(self):
        return {
            'name': self.name,
            'source': self.source.to_json(),
            'target': self.target.to_json(),
            'assignment': [[cell, [image.cell, list(image.surj)]] for cell, image in
                           sorted(self.assignment.items(), key=lambda item: sort_key(item[0]))],
        }

    @classmethod
    def from_json(cls, data, source=None, target=None):
        try:
            source = source or FinSimplicialSet.from_json(data['source'])
            target = target or FinSimplicialSet.from_json(data['target'])
            assignment = dict((freeze(cell), Simplex(freeze(image[0]), tuple(image[1])))
                              for cell, image in data['assignment'])
        except (KeyError, TypeError, IndexError, ValueError) as e:
            raise ValidationError('malformed simplicial map JSON: {0!r}'.format(e))
        return cls(source, target, assignment, data.get('name', '')).check()


def inclusion(A, X):
    """A ↪ X for A whose cells are cells of X with the same faces."""
    return SSetMap(A, X, dict((cell, X.point(cell)) for cell in A.dims), 'incl').check()


def terminal_map(X, target=None):
    target = target or simplex(0)
    (vertex,) = target.cells(0)
    return SSetMap(X, target, dict((cell, Simplex(vertex, (0,) * (k + 1))) for cell, k in X.dims.items()), '!')


def simplex_map(p, X, s, source=None):
    """The map Δ[p] -> X classifying the p-simplex s; source may be a given copy of Δ[p]."""
    if source is None:
        source = simplex(p)
    return SSetMap(source, X, dict((cell, X.restrict_simplex(s, cell)) for cell in source.dims))


class BudgetExhausted(Exception):
    pass


class Budget(object):
    def __init__(self, steps=DEFAULT_BUDGET):
        self.remaining = steps

    def spend(self, steps=1):
        self.remaining -= steps
        if self.remaining < 0:
            raise BudgetExhausted()


def _apply(assignment, s):
    image = assignment[s.cell]
    return Simplex(image.cell, tuple(image.surj[x] for x in s.surj))


def extensions(A, X, fixed=None, over=None, budget=None):
    """Every map A -> X agreeing with fixed (cell -> simplex), as assignment dicts.

    over=(f, b) restricts to maps g with f ∘ g = b, where f: X -> Y and b
    is a callable from cells of A to simplices of Y.
    """
    order = list(A.all_cells())
    fixed = dict(fixed or {})
    assignment = {}

    def candidates(cell):
        n = A.dims[cell]
        if n == 0:
            pool = X.simplices(0)
        else:
            pool = X.by_faces(n).get(tuple(_apply(assignment, f) for f in A.faces[cell]), ())
        if over is not None:
            f, b = over
            wanted = b(cell)
            pool = [z for z in pool if f(z) == wanted]
        if cell in fixed:
            pool = [z for z in pool if z == fixed[cell]]
        return pool

    def walk(i):
        if i == len(order):
            yield dict(assignment)
            return
        cell = order[i]
        for z in candidates(cell):
            if budget is not None:
                budget.spend()
            assignment[cell] = z
            for found in walk(i + 1):
                yield found
        assignment.pop(cell, None)

    return walk(0)


def maps(A, X, fixed=None, budget=None):
    """All simplicial maps A -> X."""
    return [SSetMap(A, X, assignment) for assignment in extensions(A, X, fixed, budget=budget)]


def pi0(X):
    """Vertices modulo the relation generated by 1-cells."""
    found = UnionFind(X.cells(0))
    for edge in X.cells(1):
        found.union(X.faces[edge][0].cell, X.faces[edge][1].cell)
    classes = tuple(tuple(members) for members in found.groups(key=sort_key))
    index = {}
    for i, members in enumerate(classes):
        for v in members:
            index[v] = i
    return Components(classes, index)


def component_of(X, components, cell):
    return components.index[X.restrict(cell, (0,)).cell]


def split_components(X):
    """One sub simplicial set per component, in pi0 order."""
    components = pi0(X)
    cells = [[] for _ in components.classes]
    for cell in X.dims:
        cells[component_of(X, components, cell)].append(cell)
    return components, [X.subset(c, '{0}#{1}'.format(X.name, i)) for i, c in enumerate(cells)]


def boundary_matrix(X, n):
    """Rows: (n-1)-cells, columns: n-cells; degenerate faces count as zero."""
    rows = X.cells(n - 1)
    cols = X.cells(n)
    position = dict((cell, i) for i, cell in enumerate(rows))
    matrix = [[0] * len(cols) for _ in rows]
    for j, cell in enumerate(cols):
        for i, f in enumerate(X.faces[cell]):
            if not is_degenerate(f):
                matrix[position[f.cell]][j] += (-1) ** i
    return matrix


def _elementary_divisors(matrix):
    if not matrix or not matrix[0]:
        return []
    snf = smith_normal_form(Matrix(matrix), domain=ZZ)
    size = min(snf.shape)
    return [abs(int(snf[i, i])) for i in range(size) if snf[i, i] != 0]


def homology(X, n_max=None):
    """Integral homology of the normalized chain complex in degrees 0..n_max."""
    if n_max is None:
        n_max = max(X.dim, 0)
    divisors = dict((n, _elementary_divisors(boundary_matrix(X, n))) for n in range(1, n_max + 2))
    out = []
    for n in range(n_max + 1):
        incoming = divisors[n + 1]
        outgoing = divisors[n] if n else []
        rank = len(X.cells(n)) - len(outgoing) - len(incoming)
        out.append(HomologyGroup(rank, tuple(sorted(d for d in incoming if d > 1))))
    return out


def _horn_fillers(f, p, k, top, bottom):
    X = f.source
    for z in f.fiber(p).get(bottom, ()):
        if all(X.face(z, j) == top[tuple(i for i in range(p + 1) if i != j)] for j in range(p + 1) if j != k):
            return z
    return None


def _json_assignment(assignment):
    return [[cell, [s.cell, list(s.surj)]] for cell, s in sorted(assignment.items(), key=lambda i: sort_key(i[0]))]


def default_horn_bound(f):
    return max(f.source.dim, 0) + max(f.target.dim, 0) + 2


def is_kan_fibration(f, p_max=None, budget=DEFAULT_BUDGET):
    """Right lifting against every horn Λ[k,p] ↪ Δ[p] with p <= p_max.

    Yes means every square up to p_max has a lift; No carries a square
    without one; Bound means the search budget ran out first.
    """
    if f.is_iso():
        return Verdict.yes('isomorphism')
    if p_max is None:
        p_max = default_horn_bound(f)
    spent = Budget(budget)
    Y = f.target
    try:
        for p in range(1, p_max + 1):
            for k in range(p + 1):
                h = horn(k, p)
                for bottom in Y.simplices(p):
                    def lower(cell, bottom=bottom):
                        return Y.restrict_simplex(bottom, cell)
                    for top in extensions(h, f.source, over=(f, lower), budget=spent):
                        if _horn_fillers(f, p, k, top, bottom) is None:
                            witness = {'p': p, 'k': k, 'bottom': [bottom.cell, list(bottom.surj)],
                                       'top': _json_assignment(top)}
                            return Verdict.no('no filler for Λ[{0},{1}]'.format(k, p), witness)
    except BudgetExhausted:
        return Verdict.bound('search budget of {0} steps exhausted'.format(budget))
    return Verdict.yes('horns lift up to p={0}'.format(p_max))


def is_kan_complex(X, p_max=None, budget=DEFAULT_BUDGET):
    return is_kan_fibration(terminal_map(X), p_max, budget)


def collapse(X, keep=()):
    """Greedy elementary collapses never removing a cell of keep.

    Returns the surviving cells, or None when X has degenerate faces and
    collapses are not certified.
    """
    if not X.is_delta_like():
        return None
    keep = set(keep)
    alive = set(X.dims)
    cofaces = dict((cell, []) for cell in X.dims)
    for cell in X.dims:
        for f in X.faces[cell]:
            cofaces[f.cell].append(cell)
    order = sorted(X.dims, key=lambda c: (-X.dims[c], sort_key(c)))
    progress = True
    while progress:
        progress = False
        for face in order:
            if face not in alive or face in keep:
                continue
            above = [c for c in cofaces[face] if c in alive]
            if len(above) != 1:
                continue
            top = above[0]
            if top in keep or X.dims[top] != X.dims[face] + 1:
                continue
            if any(c in alive for c in cofaces[top]):
                continue
            alive.discard(face)
            alive.discard(top)
            progress = True
    return alive


def is_collapsible(X):
    remaining = collapse(X)
    return remaining is not None and len(remaining) == 1


def _component_certificate(f):
    if f.is_iso():
        return 'isomorphism'
    if is_collapsible(f.source) and is_collapsible(f.target):
        return 'both sides collapse to a point'
    if f.is_injective_on_cells():
        image = f.image_cells()
        remaining = collapse(f.target, keep=image)
        if remaining is not None and remaining == image:
            return 'target collapses onto the image'
    return None


def _homology_summary(groups):
    return [[g.rank, list(g.torsion)] for g in groups]


def weak_equivalence_verdict(f):
    """Sound three-valued test of weak homotopy equivalence.

    No when pi0 or an integral homology group differs. Yes when each
    component map is an isomorphism or is certified by collapses.
    """
    if f.is_iso():
        return Verdict.yes('isomorphism')
    X, Y = f.source, f.target
    source_components, source_parts = split_components(X)
    target_components, target_parts = split_components(Y)
    induced = [target_components.index[f(X.point(members[0])).cell] for members in source_components.classes]
    if sorted(induced) != list(range(len(target_components.classes))):
        return Verdict.no('pi0 is not preserved bijectively',
                          {'source_components': len(source_components.classes),
                           'target_components': len(target_components.classes),
                           'induced': induced})
    n_max = max(X.dim, Y.dim, 0)
    hx = homology(X, n_max)
    hy = homology(Y, n_max)
    for n in range(n_max + 1):
        if hx[n] != hy[n]:
            return Verdict.no('H{0} differs'.format(n), {'degree': n, 'source': _homology_summary(hx),
                                                        'target': _homology_summary(hy)})
    reasons = []
    for i, j in enumerate(induced):
        reason = _component_certificate(f.restrict(source_parts[i], target_parts[j]))
        if reason is None:
            return Verdict.unknown('component {0}: no collapse certificate'.format(i))
        reasons.append(reason)
    return Verdict.yes('; '.join(sorted(set(reasons))) if reasons else 'empty')
