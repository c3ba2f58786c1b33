from collections import namedtuple
import itertools
import sys


class PropCalcError(Exception):
    """Base class for every error raised by propcalc."""


class ValidationError(PropCalcError):
    """An input graph, simplicial set, map or fixture is malformed."""

    def __init__(self, message, problems=None):
        super(ValidationError, self).__init__(message)
        self.problems = list(problems or [])

    def __str__(self):
        if not self.problems:
            return self.args[0]
        return '{0}: {1}'.format(self.args[0], '; '.join(self.problems))


class BoundError(PropCalcError):
    """A configured size bound or search budget was exceeded."""


class ProfileError(PropCalcError):
    """Colors or arities do not match port-for-port."""


class SchemeError(PropCalcError):
    """A graph is not in the pasting scheme of the prop it is used with."""


class IsoError(PropCalcError):
    """A required isomorphism does not exist."""


def debug(context, error):
    """ prints debugging information for a given context and error """
    print(str(error) + ' ' + str(context), file=sys.stderr)


# vertices: max vertices of enumerated graphs
# arity: max n+m of prop entries
# dim: max simplicial degree checked
# horn: max p of horn/boundary generators (None derives it per map)
# budget: max number of search steps for one lifting question
Bounds = namedtuple('Bounds', 'vertices arity dim horn budget')
Bounds.__new__.__defaults__ = (3, 4, 3, None, 200000)


class Verdict(object):
    """A three-valued answer with a reason and an optional witness.

    ``bound`` is a fourth value meaning a search budget ran out before an
    answer was found; it aggregates like ``unknown``.
    """
    YES = 'yes'
    NO = 'no'
    UNKNOWN = 'unknown'
    BOUND = 'bound'

    __slots__ = ('value', 'reason', 'witness')

    def __init__(self, value, reason='', witness=None):
        if value not in (self.YES, self.NO, self.UNKNOWN, self.BOUND):
            raise ValueError(value)
        self.value = value
        self.reason = reason
        self.witness = witness

    @classmethod
    def yes(cls, reason='', witness=None):
        return cls(cls.YES, reason, witness)

    @classmethod
    def no(cls, reason='', witness=None):
        return cls(cls.NO, reason, witness)

    @classmethod
    def unknown(cls, reason='', witness=None):
        return cls(cls.UNKNOWN, reason, witness)

    @classmethod
    def bound(cls, reason='', witness=None):
        return cls(cls.BOUND, reason, witness)

    @classmethod
    def from_bool(cls, value, reason='', witness=None):
        return cls.yes(reason) if value else cls.no(reason, witness)

    @classmethod
    def all(cls, verdicts, reason=''):
        """Conjunction: the first No wins, then any Bound/Unknown, else Yes."""
        verdicts = list(verdicts)
        for verdict in verdicts:
            if verdict.is_no:
                return verdict
        for verdict in verdicts:
            if not verdict.decisive:
                return verdict
        return cls.yes(reason)

    @property
    def is_yes(self):
        return self.value == self.YES

    @property
    def is_no(self):
        return self.value == self.NO

    @property
    def decisive(self):
        return self.value in (self.YES, self.NO)

    def __bool__(self):
        raise TypeError('Verdict is three-valued; test .is_yes or .is_no')

    def __eq__(self, other):
        if isinstance(other, Verdict):
            return self.value == other.value
        return self.value == other

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        if self.reason:
            return 'Verdict({0}: {1})'.format(self.value, self.reason)
        return 'Verdict({0})'.format(self.value)

    def to_json(self):
        out = {'verdict': self.value, 'reason': self.reason}
        if self.witness is not None:
            out['witness'] = self.witness
        return out


class UnionFind(object):
    """Disjoint-set forest with union by rank and path compression.

    Works with any hashable items; items never seen are singletons.
    """

    def __init__(self, items=()):
        self._parents = {}
        self._ranks = {}
        for item in items:
            self.add(item)

    def add(self, item):
        if item not in self._parents:
            self._parents[item] = item
            self._ranks[item] = 0

    def find(self, item):
        self.add(item)
        path = [item]
        root = self._parents[item]
        while root != path[-1]:
            path.append(root)
            root = self._parents[root]
        for ancestor in path:
            self._parents[ancestor] = root
        return root

    def union(self, a, b):
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return root_a
        if self._ranks[root_a] < self._ranks[root_b]:
            root_a, root_b = root_b, root_a
        self._parents[root_b] = root_a
        if self._ranks[root_a] == self._ranks[root_b]:
            self._ranks[root_a] += 1
        return root_a

    def same(self, a, b):
        return self.find(a) == self.find(b)

    def groups(self, key=repr):
        """Return the classes as sorted lists, ordered by their least member."""
        classes = {}
        for item in self._parents:
            classes.setdefault(self.find(item), []).append(item)
        out = [sorted(members, key=key) for members in classes.values()]
        return sorted(out, key=lambda members: key(members[0]))


def sort_key(x):
    """Total order on nested tuples of ints and strings."""
    return repr(x)


def report(checked=0, violations=None, **extra):
    out = {'checked': checked, 'violations': list(violations or [])}
    out.update(extra)
    return out


def sample_product(lists, budget, rng):
    """Every tuple of the product while it has at most budget members, else budget seeded draws.

    Returns (tuples, exhaustive).
    """
    total = 1
    for options in lists:
        total *= len(options)
    if total <= budget:
        return list(itertools.product(*lists)), True
    return [tuple(rng.choice(options) for options in lists) for _ in range(budget)], False
