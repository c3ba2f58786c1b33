from collections import OrderedDict

from propcalc.common import Verdict
from propcalc.graphs import Biprofile, CanonicalCode


def json_default(o):
    if isinstance(o, Verdict):
        return o.to_json()
    if isinstance(o, CanonicalCode):
        return str(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o, key=repr)
    if hasattr(o, 'to_json'):
        return o.to_json()
    raise TypeError(repr(o) + " is not JSON serializable")


def sort_keys(o):
    """Recursively order dict keys: None first, then numbers, then strings."""
    def key(k):
        if isinstance(k, tuple):
            k = k[0]
        if isinstance(k, type(None)):
            return (0, 0, "")
        try:
            return (1, float(k), "")
        except (TypeError, ValueError):
            pass
        return (2, 0, str(k))

    if isinstance(o, Biprofile):
        return str(o)
    if isinstance(o, list):
        return [sort_keys(x) for x in o]
    if isinstance(o, dict):
        return OrderedDict(sorted(((k, sort_keys(v)) for k, v in o.items()), key=key))
    return o
