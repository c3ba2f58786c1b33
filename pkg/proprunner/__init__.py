import argparse
import sys

import proprunner.commands
from propcalc.common import BoundError, PropCalcError, ValidationError, debug
from proprunner.config import apply_config, load_config


def run_props(argv=None):
    parser = argparse.ArgumentParser()
    parser.add_argument(
        "--debug",
        help="Output extra debugging information",
        action="store_true"
    )
    parser.add_argument(
        "--multi",
        help="Number of processes to use. Defaults to 1",
        default=1,
        type=int
    )
    parser.add_argument(
        "--bound-vertices",
        help="Maximum number of vertices of enumerated graphs. Defaults to 3",
        default=3,
        type=int
    )
    parser.add_argument(
        "--bound-dim",
        help="Maximum simplicial degree checked. Defaults to 3",
        default=3,
        type=int
    )
    parser.add_argument(
        "--bound-horn",
        help="Maximum dimension of horn and boundary generators. Defaults to a bound derived per map",
        default=None,
        type=int
    )
    parser.add_argument(
        "--bound-arity",
        help="Maximum n+m of prop entries. Defaults to 4",
        default=4,
        type=int
    )
    parser.add_argument(
        "--budget",
        help="Maximum number of search steps for one lifting question. Defaults to 200000",
        default=200000,
        type=int
    )
    parser.add_argument(
        "--seed",
        help="Seed for sampled checks. Defaults to 0",
        default=0,
        type=int
    )
    parser.add_argument(
        "--format",
        help="Output format. Only json is supported",
        choices=['json'],
        default='json'
    )
    parser.add_argument(
        "--fixtures",
        help="Fixture directory. Defaults to fixtures",
        default='fixtures'
    )
    parser.add_argument(
        "--config",
        help="JSON file of flag values; flags given on the command line win"
    )
    subparsers = parser.add_subparsers()

    parser_canonicalize = subparsers.add_parser(
        'canonicalize',
        help='Print the canonical code of a graph fixture'
    )
    parser_canonicalize.add_argument("graph", help="Graph fixture name or path")
    parser_canonicalize.set_defaults(func=proprunner.commands.cmd_canonicalize)

    parser_enumerate = subparsers.add_parser(
        'enumerate',
        help='List one canonical code per strict isomorphism class of scheme graphs'
    )
    parser_enumerate.add_argument("--scheme", help="prop, properad or dioperad", default='properad')
    parser_enumerate.add_argument("--colors", help="Comma separated colors. Defaults to c", default='c')
    parser_enumerate.add_argument("--biprofile", help="Biprofile such as c,c;c. Defaults to every biprofile")
    parser_enumerate.add_argument("--vertex-arity", help="Vertex arity bound n,m. Defaults to 1,1", default='1,1')
    parser_enumerate.set_defaults(func=proprunner.commands.cmd_enumerate)

    parser_free = subparsers.add_parser(
        'free',
        help='Tabulate one entry of the truncated left adjoint of a prop fixture'
    )
    parser_free.add_argument("prop", help="Prop fixture name or path")
    parser_free.add_argument("--pair", help="di-c or c-prop. Defaults to c-prop", default='c-prop')
    parser_free.add_argument("--biprofile", help="Biprofile of the entry. Defaults to c;c", default='c;c')
    parser_free.add_argument("--N", help="Vertex truncation. Defaults to 2", default=2, type=int)
    parser_free.add_argument("--degree", help="Simplicial degree. Defaults to 0", default=0, type=int)
    parser_free.add_argument("--vertex-arity", help="Vertex arity bound n,m. Defaults to 1,1", default='1,1')
    parser_free.set_defaults(func=proprunner.commands.cmd_free)

    parser_classify = subparsers.add_parser(
        'classify',
        help='Compute the W1, W2, F1 and F2 flags of a morphism fixture'
    )
    parser_classify.add_argument("morphism", help="Morphism fixture name or path")
    parser_classify.add_argument("--flags", help="Flags to compute. Defaults to W1,W2,F1,F2", default='W1,W2,F1,F2')
    parser_classify.add_argument("--rlp", help="Also test lifting against a generator family", action='append',
                                 choices=['I', 'J', 'C2'])
    parser_classify.set_defaults(func=proprunner.commands.cmd_classify)

    parser_lift = subparsers.add_parser(
        'lift',
        help='Decide whether every square from i to f has a lift'
    )
    parser_lift.add_argument("i", help="Map fixture name or path for the left map")
    parser_lift.add_argument("f", help="Map fixture name or path for the right map")
    parser_lift.set_defaults(func=proprunner.commands.cmd_lift)

    parser_selftest = subparsers.add_parser(
        'selftest',
        help='Run the property suite on the shipped corpus'
    )
    parser_selftest.add_argument("--check", help="Run only this check; may be repeated", action='append')
    parser_selftest.set_defaults(func=proprunner.commands.cmd_selftest)

    args = parser.parse_args(argv)
    if not hasattr(args, 'func'):
        parser.print_help(sys.stderr)
        return proprunner.commands.EXIT_VALIDATION
    try:
        if args.config:
            apply_config(args, parser, load_config(args.config))
        return args.func(args)
    except ValidationError as e:
        debug('while running ' + args.func.__name__, e)
        return proprunner.commands.EXIT_VALIDATION
    except BoundError as e:
        debug('while running ' + args.func.__name__, e)
        return proprunner.commands.EXIT_BOUND
    except PropCalcError as e:
        debug('while running ' + args.func.__name__, e)
        return proprunner.commands.EXIT_VIOLATION
