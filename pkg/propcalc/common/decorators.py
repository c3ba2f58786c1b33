import threading


# Memoize decorator caches the result of the wrapped method per argument tuple.
# Reads are lock-free; writes are serialised by a per-instance lock.
def memoize(f):
    def wrapper(self, *args):
        cache = self.__dict__.setdefault('cache', {})
        lock = self.__dict__.setdefault('_cache_lock', threading.Lock())
        key = (f.__name__,) + args
        try:
            return cache[key]
        except KeyError:
            pass
        value = f(self, *args)
        with lock:
            return cache.setdefault(key, value)
    wrapper.__name__ = f.__name__
    wrapper.__doc__ = f.__doc__
    return wrapper


# Decorators that modify return when self.blank = True
def returns_report(f):
    """Decorator for check reports: {'checked': int, 'violations': list}."""
    def wrapper(self, *args, **kwargs):
        if self.blank:
            return {'checked': 0, 'violations': []}
        out = f(self, *args, **kwargs)
        if out is None:
            return {'checked': 0, 'violations': []}
        return out
    wrapper.__name__ = f.__name__
    wrapper.__doc__ = f.__doc__
    return wrapper


def no_aggregation(f):
    """Decorator that prevents aggregation."""
    def wrapper(self, *args, **kwargs):
        if self.blank:
            return None
        return f(self, *args, **kwargs)
    wrapper.__name__ = f.__name__
    wrapper.__doc__ = f.__doc__
    return wrapper
