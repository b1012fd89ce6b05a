"""Memoization helpers shared by the computational modules."""

import functools

__all__ = ['cached', 'clear_caches']


_cleanups = []


def cached(func):
    """Cache results of a pure function of hashable arguments, falling back
    to an uncached call for unhashable ones.
    """

    memo = functools.lru_cache(maxsize=None)(func)
    _cleanups.append(memo.cache_clear)

    @functools.wraps(func)
    def inner(*args, **kwds):
        try:
            return memo(*args, **kwds)
        except TypeError:
            pass  # Unhashable arguments; real errors are raised below.
        return func(*args, **kwds)
    inner.cache_clear = memo.cache_clear
    return inner


def clear_caches():
    for f in _cleanups:
        f()
