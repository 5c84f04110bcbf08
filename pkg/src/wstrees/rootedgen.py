"""Streaming enumeration of rooted trees by canonical weight sequence.

``rooted_trees(n)`` yields every rooted tree of order ``n`` exactly once, as
its canonical weight sequence, in decreasing (relex) order.  A tree whose
root's first subtree has order ``q`` is ``(n,) + a + b[1:]`` where ``a`` is a
rooted tree of order ``q`` and ``b`` one of order ``n - q`` whose own first
subtree does not beat ``a``.  The helpers below produce that block for one
``q`` at a time.

Small orders are held in a :class:`RootedCache`.  Index conventions inside
the cache are 0-based (``rt_list[k][0]`` is the first tree of order ``k``);
:func:`rt_qstart` converts to the 1-based positions used in the literature.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from typing import Iterable, Iterator

from .wseq import WeightSeq

_BASE = (
    (),
    ((1,),),
    ((2, 1),),
    ((3, 2, 1), (3, 1, 1)),
    ((4, 3, 2, 1), (4, 3, 1, 1), (4, 2, 1, 1), (4, 1, 1, 1)),
)

# Largest cache built automatically for rooted workloads; |B(16)| = 235381.
ROOTED_L_CAP = 16


class ConfigError(ValueError):
    """Cache bound or order arguments outside what an algorithm supports."""


class RootedCache:
    """Materialized ``B(k)`` tables for ``1 <= k <= L``.

    Attributes
    ----------
    L : int
        Largest cached order.
    rt_list : tuple
        ``rt_list[k]`` is the relex-ordered tuple of canonical sequences of
        order ``k``; ``rt_list[0]`` is empty.
    rt_stripped : tuple
        Same as ``rt_list`` with each root weight removed.
    rt_qstart_table : tuple
        ``rt_qstart_table[k][q]`` is the 0-based index of the first entry of
        ``rt_list[k]`` whose second weight is ``q`` (``1 <= q < k``).
    adj : dict or None
        Rooted adjacency lists keyed by sequence, when built with
        ``adjacency=True``.
    """

    __slots__ = ("rt_list", "rt_stripped", "rt_qstart_table", "adj")

    def __init__(self) -> None:
        self.rt_list: list | tuple = [()]
        self.rt_stripped: list | tuple = [()]
        self.rt_qstart_table: list | tuple = [()]
        self.adj = None

    @property
    def L(self) -> int:
        return len(self.rt_list) - 1

    def _push(self, trees: tuple[WeightSeq, ...]) -> None:
        k = len(self.rt_list)
        starts = [0] * k
        if k > 1:
            for idx in range(len(trees) - 1, -1, -1):
                starts[trees[idx][1]] = idx
        self.rt_list.append(trees)
        self.rt_stripped.append(tuple(t[1:] for t in trees))
        self.rt_qstart_table.append(tuple(starts))

    def _freeze(self) -> None:
        self.rt_list = tuple(self.rt_list)
        self.rt_stripped = tuple(self.rt_stripped)
        self.rt_qstart_table = tuple(self.rt_qstart_table)

    def __repr__(self) -> str:
        return f"RootedCache(L={self.L}, adjacency={self.adj is not None})"


def init_cache(L: int, adjacency: bool = False) -> RootedCache:
    """Build the tables for orders ``1..L``, each from the ones before it."""
    if L < 4:
        raise ConfigError(f"cache bound must be at least 4, got {L}")
    cache = RootedCache()
    for trees in _BASE[1:]:
        cache._push(trees)
    for k in range(5, L + 1):
        # cache currently holds 1..k-1, which satisfies every helper precondition
        cache._push(tuple(rooted_trees(k, cache)))
    if adjacency:
        from .convert import rooted_adj_table

        cache.adj = rooted_adj_table(cache)
    cache._freeze()
    return cache


@functools.lru_cache(maxsize=8)
def get_cache(L: int, adjacency: bool = False) -> RootedCache:
    """Shared, memoized :func:`init_cache`."""
    return init_cache(L, adjacency)


def free_cache_bound(n: int) -> int:
    return max(4, n // 2 + 1)


def rooted_cache_bound(n: int) -> int:
    return max(4, min(n - 1, ROOTED_L_CAP))


def rt_qstart(cache: RootedCache, n: int, q: int) -> int:
    """1-based index of the first tree in ``B(n)`` whose second weight is ``q``."""
    if not 1 <= q < n <= cache.L:
        raise ConfigError(f"rt_qstart needs 1 <= q < n <= L, got n={n}, q={q}, L={cache.L}")
    return cache.rt_qstart_table[n][q] + 1


def _ones(k: int) -> WeightSeq:
    return (1,) * k


def rt_helper_ref(n: int, q: int) -> Iterator[WeightSeq]:
    """Unoptimized generator of ``B_q(n)``; kept as a reference for testing."""
    if not 1 <= q <= n - 1:
        raise ConfigError(f"need 1 <= q <= n-1, got n={n}, q={q}")
    for a in _rooted_ref(q):
        if q == n - 1:
            yield (n,) + a
            continue
        for r in range(min(n - q - 1, q), 0, -1):
            for b in rt_helper_ref(n - q, r):
                bh = b[1:]
                if a >= bh[: len(a)]:
                    yield (n,) + a + bh


def _rooted_ref(n: int) -> Iterator[WeightSeq]:
    if n == 1:
        yield (1,)
        return
    for q in range(n - 1, 0, -1):
        yield from rt_helper_ref(n, q)


def rt_helper(n: int, q: int, cache: RootedCache) -> Iterator[WeightSeq]:
    """Generate ``B_q(n)`` in relex order using the cached tables.

    Requires ``1 <= q <= n - 1``, ``q <= L`` and ``L >= n // 2 + 1``.
    """
    L = cache.L
    if not 1 <= q <= n - 1:
        raise ConfigError(f"need 1 <= q <= n-1, got n={n}, q={q}")
    if q > L or L < n // 2 + 1:
        raise ConfigError(f"cache bound L={L} too small for n={n}, q={q}")
    return _helper(n, q, cache)


def _helper(n: int, q: int, cache: RootedCache) -> Iterator[WeightSeq]:
    # preconditions already checked; recursion only shrinks n
    if q == 1:
        yield (n,) + _ones(n - 1)
        return
    if q == 2:
        for t in range((n - 1) // 2, 0, -1):
            yield (n,) + (2, 1) * t + _ones(n - 1 - 2 * t)
        return

    trees = cache.rt_list[q]
    if q == n - 1:
        for a in trees:
            yield (n,) + a
        return
    if q == n - 2:
        for a in trees:
            yield (n,) + a + (1,)
        return

    tails = cache.rt_stripped[n - q] if n - q <= cache.L else None
    if q >= (n + 1) // 2:
        # second subtree is strictly smaller than the first: no gate needed
        for a in trees:
            yield from map(((n,) + a).__add__, tails)
        return
    if q == (n - 1) // 2:
        # a = B(q)[k] pairs with B(n-q)[k + skip:], skip = |B(n/2)| for even n
        start = len(cache.rt_list[n // 2]) if n % 2 == 0 else 0
        for a in trees:
            yield from map(((n,) + a).__add__, tails[start:])
            start += 1
        return
    if tails is not None:
        # q >= n - L: scan forward from the first tree whose first subtree is q
        start = cache.rt_qstart_table[n - q][q]
        for a in trees:
            la = len(a)
            while a < tails[start][:la]:
                start += 1
            yield from map(((n,) + a).__add__, tails[start:])
        return

    for a in trees:
        head = (n,) + a
        la = len(a)
        for r in range(q, 0, -1):
            stream: Iterable[WeightSeq] = _helper(n - q, r, cache)
            if r == q:
                # once the gate passes it passes for the rest of the block
                stream = itertools.dropwhile(lambda b: a < b[1 : la + 1], stream)
            for b in stream:
                yield head + b[1:]


def _helper_any(n: int, q: int, cache: RootedCache) -> Iterator[WeightSeq]:
    """``B_q(n)`` for any cache; falls back to plain recursion past the table."""
    L = cache.L
    if q <= L and L >= n // 2 + 1:
        yield from _helper(n, q, cache)
        return
    if q == 1:
        yield (n,) + _ones(n - 1)
        return
    for a in _trees_of_order(q, cache):
        head = (n,) + a
        if q == n - 1:
            yield head
            continue
        if q == n - 2:
            yield head + (1,)
            continue
        la = len(a)
        for r in range(min(n - q - 1, q), 0, -1):
            stream: Iterable[WeightSeq] = _helper_any(n - q, r, cache)
            if r == q:
                stream = itertools.dropwhile(lambda b: a < b[1 : la + 1], stream)
            for b in stream:
                yield head + b[1:]


def _trees_of_order(k: int, cache: RootedCache) -> Iterable[WeightSeq]:
    if k <= cache.L:
        return cache.rt_list[k]
    return rooted_trees(k, cache)


def rooted_trees(n: int, cache: RootedCache | None = None) -> Iterator[WeightSeq]:
    """Yield ``B(n)``: canonical weight sequences of all rooted trees of order ``n``.

    With no cache, one of bound ``min(n - 1, ROOTED_L_CAP)`` is used.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if cache is None:
        cache = get_cache(rooted_cache_bound(n))
    return _rooted(n, cache)


def _rooted(n: int, cache: RootedCache) -> Iterator[WeightSeq]:
    if n == 1:
        yield (1,)
        return
    for q in range(n - 1, 0, -1):
        yield from _helper_any(n, q, cache)


def ilen(it: Iterable) -> int:
    """Consume an iterable, returning how many items it produced."""
    counter = itertools.count()
    deque(zip(it, counter), maxlen=0)
    return next(counter)


def count_rooted(n: int, cache: RootedCache | None = None) -> int:
    return ilen(rooted_trees(n, cache))


def rooted_partition(n: int, q: int, cache: RootedCache) -> Iterator[WeightSeq]:
    """``B_q(n)`` through whichever route the cache allows."""
    if not 1 <= q <= n - 1:
        raise ConfigError(f"need 1 <= q <= n-1, got n={n}, q={q}")
    return _helper_any(n, q, cache)
