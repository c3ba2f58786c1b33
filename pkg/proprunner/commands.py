"""One function per subcommand. Each prints JSON on stdout, a summary on stderr and returns an exit code."""
import json
import sys

from propcalc.free import free_entry_table, parse_pair
from propcalc.graphs import Biprofile, Scheme, biprofiles, canonical_labeling, enumerate_graphs
from propcalc.lifting import boxslash, classify_morphism, rlp_generators
from proprunner.common import json_default, sort_keys
from proprunner.config import bounds_from_args
from proprunner.workspace import Workspace

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BOUND = 2
EXIT_VIOLATION = 3


def emit(out, summary=None):
    json.dump(sort_keys(out), sys.stdout, indent=2, default=json_default)
    sys.stdout.write('\n')
    if summary:
        print(summary, file=sys.stderr)


def cmd_canonicalize(args):
    graph = Workspace(args.fixtures).graph(args.graph)
    code, vertex_order, edge_order = canonical_labeling(graph)
    emit({'code': str(code), 'vertex_order': list(vertex_order), 'edge_order': list(edge_order),
          'biprofile': str(graph.biprofile())},
         '{0} vertices, biprofile {1}'.format(len(graph.vertices), graph.biprofile()))
    return EXIT_OK


def _enumerate_one(item):
    scheme, colors, bp, max_vertices, vertex_arity_bound = item
    return str(bp), [str(code) for code in enumerate_graphs(scheme, colors, bp, max_vertices, vertex_arity_bound)]


def cmd_enumerate(args):
    colors = tuple(args.colors.split(','))
    vertex_arity_bound = tuple(int(x) for x in args.vertex_arity.split(','))
    if args.biprofile:
        profiles = [Biprofile.parse(args.biprofile)]
    else:
        profiles = biprofiles(colors, vertex_arity_bound[0], vertex_arity_bound[1], args.bound_arity)
    items = [(Scheme.parse(args.scheme).value, colors, bp, args.bound_vertices, vertex_arity_bound)
             for bp in profiles]
    if args.multi > 1:
        from multiprocessing import Pool
        pool = Pool(args.multi)
        results = pool.map(_enumerate_one, items)
    else:
        results = list(map(_enumerate_one, items))
    table = dict(results)
    emit({'scheme': Scheme.parse(args.scheme).value, 'max_vertices': args.bound_vertices, 'classes': table},
         '{0} classes over {1} biprofiles'.format(sum(len(v) for v in table.values()), len(table)))
    return EXIT_OK


def cmd_free(args):
    P = Workspace(args.fixtures).prop(args.prop)
    pair = parse_pair(args.pair)
    table = free_entry_table(P, pair, Biprofile.parse(args.biprofile), args.N, args.degree,
                             tuple(int(x) for x in args.vertex_arity.split(',')))
    emit(table, '{0} classes of L {1}({2}) at N={3}'.format(len(table['classes']), P.name, args.biprofile, args.N))
    return EXIT_OK


def cmd_classify(args):
    f = Workspace(args.fixtures).morphism(args.morphism)
    flags = tuple(args.flags.split(','))
    classification = classify_morphism(f, bounds_from_args(args), flags)
    out = {'morphism': f.name, 'classification': classification.to_json()}
    requested = [getattr(classification, flag) for flag in flags]
    for family in args.rlp or ():
        verdict = rlp_generators(f, family, bounds_from_args(args))
        out.setdefault('rlp', {})[family] = verdict.to_json()
        requested.append(verdict)
    emit(out, ' '.join('{0}={1}'.format(flag, getattr(classification, flag).value) for flag in flags))
    if any(v.is_no for v in requested):
        return EXIT_VIOLATION
    if any(v.value == 'bound' for v in requested):
        return EXIT_BOUND
    return EXIT_OK


def cmd_lift(args):
    workspace = Workspace(args.fixtures)
    i, f = workspace.sset_map(args.i), workspace.sset_map(args.f)
    verdict = boxslash(i, f, args.budget)
    emit({'i': args.i, 'f': args.f, 'lifting': verdict.to_json()}, '{0} ⧄ {1}: {2}'.format(args.i, args.f,
                                                                                        verdict.value))
    if verdict.value == 'bound':
        return EXIT_BOUND
    return EXIT_OK if verdict.is_yes else EXIT_VIOLATION


def cmd_selftest(args):
    from proprunner.selftest import selftest
    return selftest(args)

