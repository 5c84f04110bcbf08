"""Free trees of order n, one per isomorphism class, by free weight sequence.

A tree with a single centroid is written as its canonical sequence rooted at
the centroid, so every root subtree has order at most ``(n - 1) // 2``.  A
tree with two centroids is written as the two halves' canonical sequences,
larger half first.  Unicentroidal trees come first; their leading weight
``n`` exceeds the ``n / 2`` leading every bicentroidal one, so the combined
stream stays in relex order.
"""

from __future__ import annotations

from typing import Iterator

from .rootedgen import ConfigError, RootedCache, free_cache_bound, get_cache, ilen, _helper
from .wseq import WeightSeq


def _check(n: int, cache: RootedCache | None) -> RootedCache:
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if cache is None:
        return get_cache(free_cache_bound(n))
    if cache.L < n // 2 + 1:
        raise ConfigError(f"free trees of order {n} need L >= {n // 2 + 1}, got {cache.L}")
    return cache


def uft(n: int, cache: RootedCache | None = None) -> Iterator[WeightSeq]:
    """Unicentroidal free trees of order ``n``."""
    cache = _check(n, cache)
    return _uft(n, cache)


def _uft(n: int, cache: RootedCache) -> Iterator[WeightSeq]:
    if n == 1:
        yield (1,)
        return
    for q in range((n - 1) // 2, 0, -1):
        yield from _helper(n, q, cache)


def bft(n: int, cache: RootedCache | None = None) -> Iterator[WeightSeq]:
    """Bicentroidal free trees of order ``n`` (``n`` even)."""
    if n < 2 or n % 2:
        raise ValueError(f"bicentroidal trees need an even order >= 2, got {n}")
    cache = _check(n, cache)
    return _bft(n, cache)


def _bft(n: int, cache: RootedCache) -> Iterator[WeightSeq]:
    halves = cache.rt_list[n // 2]
    for i, a1 in enumerate(halves):
        # relex order of halves means a1 >= a2 exactly for the suffix from i
        rest = halves[i:]
        assert a1 >= rest[-1]
        yield from map(a1.__add__, rest)


def free_trees(n: int, cache: RootedCache | None = None) -> Iterator[WeightSeq]:
    """Yield the free weight sequence of every free tree of order ``n``."""
    cache = _check(n, cache)
    return _free(n, cache)


def _free(n: int, cache: RootedCache) -> Iterator[WeightSeq]:
    yield from _uft(n, cache)
    if n % 2 == 0:
        yield from _bft(n, cache)


def count_free(n: int, cache: RootedCache | None = None) -> int:
    return ilen(free_trees(n, cache))


def free_partitions(n: int) -> list[tuple[str, int]]:
    """Independent work units whose outputs, concatenated, give ``free_trees(n)``."""
    if n == 1:
        return [("U", 0)]
    parts = [("U", q) for q in range((n - 1) // 2, 0, -1)]
    if n % 2 == 0:
        parts.append(("B", 0))
    return parts


def free_partition(n: int, part: tuple[str, int], cache: RootedCache) -> Iterator[WeightSeq]:
    kind, q = part
    if kind == "B":
        return _bft(n, cache)
    if n == 1:
        return iter([(1,)])
    return _helper(n, q, cache)
