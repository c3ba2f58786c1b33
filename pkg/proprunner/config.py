"""Optional JSON config file for calculate_props.py.

Keys are flag names, with dashes or underscores. A value fills a flag only
when that flag was left at its default on the command line.
"""
import json

from propcalc.common import Bounds, ValidationError


def load_config(path):
    try:
        with open(path) as fp:
            data = json.load(fp)
    except (IOError, OSError) as e:
        raise ValidationError('cannot read config {0}: {1}'.format(path, e))
    except ValueError as e:
        raise ValidationError('config {0} is not JSON: {1}'.format(path, e))
    if not isinstance(data, dict):
        raise ValidationError('config {0} must hold a JSON object'.format(path))
    return dict((key.replace('-', '_'), value) for key, value in data.items())


def apply_config(args, parser, config):
    for dest, value in config.items():
        if not hasattr(args, dest):
            raise ValidationError('unknown config key {0!r}'.format(dest))
        if getattr(args, dest) == parser.get_default(dest):
            setattr(args, dest, value)
    return args


def bounds_from_args(args):
    return Bounds(vertices=args.bound_vertices, arity=args.bound_arity, dim=args.bound_dim,
                  horn=args.bound_horn, budget=args.budget)
