"""Property suites run by ``calculate_props.py selftest``.

Every public method of PropertySuite is one check and returns a report
{'checked': int, 'violations': [...]}; the runner calls them in turn.
"""
from propcalc import ssets
from propcalc.common import Bounds, report, sort_key
from propcalc.common.decorators import memoize, no_aggregation, returns_report
from propcalc.corpus import Corpus
from propcalc.free import (C_PROP, DI_C, beta_decomposition_check, extension_laws_check, formal_composite_check,
                           free_prop, gnm_hom_check, monotonicity_check, stratum_zero_check, transfer_check,
                           unit_injectivity_check, well_behaved_check)
from propcalc.graphs import (Biprofile, Scheme, betti, biprofiles, canonical_form, enumerate_graph_objects,
                             incidence_graph)
from propcalc.lifting import (bounds_monotonicity_check, classify_morphism, kan_agreement_check,
                              local_class_check, local_lifting_equivalence, retract_check, rlp_adjunction_check,
                              two_of_three_check)
from propcalc.properads import check_axioms, corrupted_prop, endomorphism_prop, terminal_prop
from propcalc.ssets import FinSimplicialSet, Simplex, homology
from propcalc.substitution import (check_closure, check_graft_additivity, check_substitution_laws,
                                   graftable_graphs, scheme_graphs)

# Graph families of the substitution and homology suites; --bound-vertices does not move them.
NEST_VERTICES = 4
PROP_NEST_VERTICES = 2
CLOSURE_VERTICES = 2
ORACLE_VERTICES = 6
PROP_ORACLE_VERTICES = 3
GRAFT_VERTICES = 4
CONNECTED_PROFILES = ('c;c', 'c;c,c', 'c,c;c', 'c,c;c,c')
TRIVALENT_PROFILES = ('c;c,c', 'c,c;c')
BETA_VERTICES = 2
# Vertex arities of the free-construction checks on the arity-2 fixtures.
LINEAR = (1, 1)


def merge(*reports, **extra):
    out = report(sum(r['checked'] for r in reports), [v for r in reports for v in r['violations']])
    out.update(extra)
    return out


def realization(graph):
    """The incidence graph of a colored graph as a one-dimensional simplicial set."""
    ig = incidence_graph(graph)
    cells = dict((('node', node), 0) for node in ig.nodes())
    faces = {}
    for i, (a, b, _) in enumerate(sorted(ig.edges(keys=True), key=sort_key)):
        cells[('link', i)] = 1
        faces[('link', i)] = [Simplex(('node', b), (0,)), Simplex(('node', a), (0,))]
    return FinSimplicialSet(cells, faces, 'realization')


def homology_betti(graph):
    h0, h1 = homology(realization(graph), 1)
    return (max(h0.rank - 1, 0), h1.rank)


class PropertySuite(object):
    blank = False

    def __init__(self, bounds=None, seed=0):
        bounds = bounds or Bounds()
        self.bounds = bounds
        self.seed = seed
        self.corpus = Corpus()
        # Lifting searches over the corpus stop at 2-dimensional horns unless told otherwise.
        self.lifting_bounds = bounds._replace(horn=2) if bounds.horn is None else bounds
        self.N = max(2, min(bounds.vertices, 3))

    @memoize
    def _props(self):
        """(prop, pair) fixtures for the free-construction checks."""
        terminal_di = terminal_prop(Scheme.DIOPERAD, arity_bound=2)
        terminal = terminal_prop(Scheme.PROPERAD, arity_bound=2)
        end_di = endomorphism_prop(range(2), Scheme.DIOPERAD, arity_bound=2)
        end = endomorphism_prop(range(2), Scheme.PROPERAD, arity_bound=2)
        return [(terminal_di, DI_C), (end_di, DI_C), (terminal, C_PROP), (end, C_PROP)]

    @returns_report
    def substitution_laws(self):
        graphs = scheme_graphs(Scheme.PROP, ('c',), PROP_NEST_VERTICES, (2, 2))
        graphs += enumerate_graph_objects(Scheme.PROPERAD, ('c',), 'c;c', NEST_VERTICES,
                                          vertex_profiles=CONNECTED_PROFILES)
        closure = [check_closure(scheme, sample_budget=20, max_vertices=CLOSURE_VERTICES, seed=self.seed)
                   for scheme in Scheme]
        return merge(check_substitution_laws(graphs), *closure)

    @returns_report
    def betti_numbers(self):
        graphs = scheme_graphs(Scheme.PROP, ('c',), PROP_ORACLE_VERTICES, (2, 2))
        graphs += enumerate_graph_objects(Scheme.PROPERAD, ('c',), 'c;c', ORACLE_VERTICES,
                                          vertex_profiles=TRIVALENT_PROFILES)
        checked = 0
        violations = []
        for graph in graphs:
            checked += 1
            if betti(graph) != homology_betti(graph):
                violations.append({'graph': str(canonical_form(graph)), 'betti': list(betti(graph)),
                                   'homology': list(homology_betti(graph))})
        pieces = graftable_graphs(Scheme.PROP, ('c',), GRAFT_VERTICES, (2, 2), ('c;c',) + TRIVALENT_PROFILES)
        return merge(report(checked, violations), check_graft_additivity(pieces))

    @returns_report
    def beta_decomposition(self):
        reports = []
        for P, pair in self._props():
            for bp in ('c;c', 'c;', ';c'):
                reports.append(beta_decomposition_check(P, pair, bp, self.N, vertex_arity_bound=LINEAR))
        for scheme, pair in ((Scheme.PROPERAD, C_PROP), (Scheme.DIOPERAD, DI_C)):
            terminal = terminal_prop(scheme, arity_bound=4)
            end = endomorphism_prop(range(2), scheme, arity_bound=4)
            for bp in biprofiles(('c',), 2, 2):
                reports.append(beta_decomposition_check(terminal, pair, bp, BETA_VERTICES, vertex_arity_bound=(2, 2)))
                reports.append(stratum_zero_check(end, pair, bp, BETA_VERTICES, vertex_arity_bound=(2, 2),
                                                  seed=self.seed))
        terminal = terminal_prop(Scheme.PROPERAD, arity_bound=4)
        for bp in ('c;c', 'c,c;c', 'c;c,c'):
            reports.append(beta_decomposition_check(terminal, C_PROP, bp, self.N, vertex_arity_bound=(2, 2)))
        terminal_di = terminal_prop(Scheme.DIOPERAD, arity_bound=4)
        reports.append(beta_decomposition_check(terminal_di, DI_C, 'c;c', self.N, vertex_arity_bound=(2, 2)))
        return merge(*reports)

    @returns_report
    def unit_injectivity(self):
        reports = [unit_injectivity_check(P, pair, self.N, LINEAR) for P, pair in self._props()]
        for name in ('∂Δ[1]', 'Δ[1]'):
            Z = self.corpus.zero(self.corpus.space(name))
            reports.append(unit_injectivity_check(Z, C_PROP, self.N, LINEAR))
        return merge(*reports)

    @returns_report
    def kan_agreement(self):
        morphisms = self.corpus.morphisms()
        return merge(*[kan_agreement_check(f, self.lifting_bounds) for f in morphisms], morphisms=len(morphisms))

    @returns_report
    def local_liftings(self):
        reports = [local_lifting_equivalence(f, self.lifting_bounds) for f in self.corpus.morphisms()]
        decisive = sum(1 for r in reports if r['decisive'])
        out = merge(*reports, decisive=decisive)
        if decisive < 15:
            out['violations'].append({'law': 'decisive cases', 'found': decisive, 'needed': 15})
        return out

    @returns_report
    def local_two_of_three_fails(self):
        """The entrywise class alone violates two out of three on the shipped triple."""
        g, f = self.corpus.remark_triple()
        W1 = dict((name, classify_morphism(h, self.lifting_bounds, ('W1',)).W1.value)
                  for name, h in (('g', g), ('fg', f.compose(g)), ('f', f)))
        violations = []
        if W1 != {'g': 'yes', 'fg': 'yes', 'f': 'no'}:
            violations.append({'law': 'counterexample', 'W1': W1})
        local = two_of_three_check(g, f, self.lifting_bounds, local_only=True)
        if not local['violations']:
            violations.append({'law': 'local two of three should fail'})
        full = two_of_three_check(g, f, self.lifting_bounds)
        return merge(report(2, violations), full, W1=W1)

    @returns_report
    def two_of_three(self):
        reports = [two_of_three_check(g, f, self.lifting_bounds) for g, f in self.corpus.pairs()]
        reports += [two_of_three_check(g, f, self.lifting_bounds) for g, f in self.corpus.mixed_pairs()]
        premises = sum(1 for r in reports if r['premise'] and r['conclusive'])
        out = merge(*reports, premises=premises)
        if premises < 10:
            out['violations'].append({'law': 'pairs with premise', 'found': premises, 'needed': 10})
        return out

    @returns_report
    def well_behaved(self):
        reports = [well_behaved_check(pair, P, self.N, LINEAR) for P, pair in self._props()]
        reports.append(well_behaved_check(C_PROP, self.corpus.category(('a', 'b')), self.N, LINEAR))
        return merge(*reports)

    @returns_report
    def gnm_characterization(self):
        props = [terminal_prop(Scheme.PROPERAD, arity_bound=3),
                 endomorphism_prop(range(2), Scheme.PROPERAD, arity_bound=3),
                 self.corpus.zero(self.corpus.space('∂Δ[1]')),
                 self.corpus.category(('a', 'b'))]
        spaces = [ssets.empty(), ssets.simplex(0), ssets.boundary(1)]
        reports = []
        for n, m in ((1, 1), (2, 1)):
            for P in props:
                if n + m > P.arity_bound:
                    continue
                for X in spaces:
                    reports.append(gnm_hom_check(n, m, X, P, verify_extensions=(n, m) == (1, 1)))
        return merge(*reports)

    @returns_report
    def rlp_adjunction(self):
        reports = []
        for f in self.corpus.zero_morphisms():
            for K in self.corpus.horn_inclusions(2):
                reports.append(rlp_adjunction_check(f, K, 1, 1, self.lifting_bounds))
        return merge(*reports)

    @returns_report
    def extension_laws(self):
        return merge(*[extension_laws_check(pair, ('c',), Biprofile.parse('c;c'), self.N)
                       for pair in (DI_C, C_PROP)])

    @returns_report
    def truncation_monotonicity(self):
        return merge(*[monotonicity_check(P, pair, 'c;c', self.N - 1, LINEAR) for P, pair in self._props()])

    @returns_report
    def axioms(self):
        """Shipped props satisfy the axioms and the corrupted one does not."""
        props = [P for P, _ in self._props()]
        props += [self.corpus.zero(self.corpus.space(name)) for name in ('∂Δ[1]', 'Δ[1]')]
        props.append(self.corpus.category(('a', 'b')))
        reports = [check_axioms(P, self.bounds._replace(vertices=self.N), seed=self.seed) for P in props]
        corrupted = check_axioms(corrupted_prop(endomorphism_prop(range(2), Scheme.PROPERAD, arity_bound=2)),
                                 self.bounds._replace(vertices=self.N), seed=self.seed)
        out = merge(*reports)
        out['checked'] += 1
        if not corrupted['violations']:
            out['violations'].append({'law': 'corrupted prop passes the axioms'})
        return out

    @returns_report
    def retracts(self):
        return merge(*[retract_check(phi, self.corpus.zero) for phi in self.corpus.retract_maps()])

    @returns_report
    def local_class(self):
        return local_class_check(self.corpus.pairs() + self.corpus.mixed_pairs(), self.lifting_bounds)

    @returns_report
    def transfer(self):
        morphisms = self.corpus.other_morphisms()[3:]
        morphisms += [self.corpus.zero_morphism(name) for name in ('Δ[1] -> Δ[0]', 'swap ∂Δ[1]')]
        return merge(*[transfer_check(f, C_PROP, self.N, LINEAR) for f in morphisms])

    @returns_report
    def formal_composites(self):
        G = free_prop(Scheme.PROPERAD, ('c',), {'c;c': ssets.simplex(1)}, arity_bound=2, max_vertices=self.N)
        graphs = enumerate_graph_objects(Scheme.PROPERAD, ('c',), 'c;c', 2, vertex_profiles=['c;c'])
        return formal_composite_check(G, graphs)

    @returns_report
    def classification_monotonicity(self):
        morphisms = self.corpus.zero_morphisms()[:10]
        small = self.lifting_bounds._replace(horn=1)
        return merge(*[bounds_monotonicity_check(f, [small, self.lifting_bounds]) for f in morphisms])

    @no_aggregation
    def corpus_summary(self):
        return {'morphisms': len(self.corpus.morphisms()), 'pairs': len(self.corpus.pairs()),
                'N': self.N, 'horn': self.lifting_bounds.horn}
