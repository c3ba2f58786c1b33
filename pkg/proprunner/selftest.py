import inspect
import sys
import traceback

import proprunner.shared
from propcalc.checks import PropertySuite
from proprunner.common import sort_keys
from proprunner.config import bounds_from_args


def call_checks(suite, args):
    """Run every enabled check of suite.

    Args:
      suite: object whose public methods each return a report dict.

      args: Object containing program run options (set by CLI arguments at runtime. See __init__ for more details).
    """
    this_out = {}
    for name, function in inspect.getmembers(suite, predicate=inspect.ismethod):
        if not proprunner.shared.use_check(suite, name):
            continue
        try:
            this_out[name] = function()
        except KeyboardInterrupt:
            exit()
        except Exception:
            traceback.print_exc(file=sys.stdout)
            this_out[name] = {'checked': 0, 'violations': [], 'error': traceback.format_exc().splitlines()[-1]}
    if args.debug:
        print(this_out)
    return this_out


def check_names(args):
    suite = PropertySuite()
    suite.enabled_checks = args.check
    return [name for name, _ in inspect.getmembers(suite, predicate=inspect.ismethod)
            if proprunner.shared.use_check(suite, name)]


def run_check(item):
    """Pool worker: a fresh suite per check, restricted to one name."""
    bounds, seed, name, args = item
    suite = PropertySuite(bounds, seed)
    suite.enabled_checks = [name]
    return call_checks(suite, args)


def summarize(results):
    failed = dict((name, len(out.get('violations', []))) for name, out in results.items()
                  if out.get('violations') or out.get('error'))
    return failed


def selftest(args):
    from proprunner.commands import EXIT_OK, EXIT_VIOLATION, emit
    bounds = bounds_from_args(args)
    items = [(bounds, args.seed, name, args) for name in check_names(args)]
    if args.multi > 1:
        from multiprocessing import Pool
        pool = Pool(args.multi)
        parts = pool.map(run_check, items)
    else:
        parts = list(map(run_check, items))
    results = {}
    for part in parts:
        results.update(part)
    failed = summarize(results)
    emit(sort_keys({'bounds': bounds._asdict(), 'seed': args.seed, 'checks': results, 'failed': failed}),
         '{0} checks, {1} failed{2}'.format(len(results), len(failed),
                                            ': ' + ', '.join(sorted(failed)) if failed else ''))
    return EXIT_VIOLATION if failed else EXIT_OK
