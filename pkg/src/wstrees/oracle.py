"""Brute-force ground truth for small orders.

Every labelled tree on ``1..n`` is decoded from its Prüfer code and reduced
to a canonical name; the set of names is the set of isomorphism classes.
None of this touches the generators, so agreement is real evidence.
"""

from __future__ import annotations

import heapq
import itertools
import math
from typing import Iterator, Sequence

from .convert import AdjList, _check_tree, _cws, _fws
from .wseq import WeightSeq

# n ** (n - 2) labelled trees: 4.8M at n = 9, 262k at n = 8
MAX_FREE_ORDER = 9
MAX_ROOTED_ORDER = 8
# every tree of order <= 8 has at most 7! = 5040 sibling orderings
MAX_ORDERINGS = 40320
EXHAUSTIVE_UP_TO = 8


class OracleRangeError(ValueError):
    pass


def prufer_to_tree(p: Sequence[int], n: int) -> AdjList:
    """The labelled tree on ``1..n`` with Prüfer code ``p``."""
    if n < 2 or len(p) != n - 2:
        raise ValueError(f"a Prüfer code for order {n} has length {n - 2}")
    if any(not 1 <= x <= n for x in p):
        raise ValueError(f"labels must lie in 1..{n}: {list(p)}")
    return AdjList.from_edges(n, _prufer_edges(p, n))


def _prufer_edges(p: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * (n + 1)
    for x in p:
        degree[x] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in p:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def tree_to_prufer(t: AdjList) -> list[int]:
    """Prüfer code of a labelled tree (repeatedly strip the smallest leaf)."""
    _check_tree(t)
    n = t.n
    nb = [set(x) for x in ((),) + t.neighbors]
    leaves = [v for v in range(1, n + 1) if len(nb[v]) == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (x,) = nb[leaf]
        code.append(x)
        nb[x].discard(leaf)
        if len(nb[x]) == 1:
            heapq.heappush(leaves, x)
    return code


def _partitions(total: int, largest: int) -> Iterator[list[int]]:
    if total == 0:
        yield []
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield [first] + rest


def _multiset_perms(counts: list[int], length: int) -> Iterator[tuple[int, ...]]:
    # counts[v] copies of label v; distinct arrangements only
    if length == 0:
        yield ()
        return
    for v, c in enumerate(counts):
        if c:
            counts[v] -= 1
            for rest in _multiset_perms(counts, length - 1):
                yield (v,) + rest
            counts[v] += 1


def prufer_codes(n: int, exhaustive: bool = True) -> Iterator[tuple[int, ...]]:
    """Prüfer codes of order ``n``.

    ``exhaustive=False`` keeps only codes in which label ``v`` occurs at
    least as often as label ``v + 1``, i.e. trees whose vertex degrees are
    non-increasing in the label.  Sorting any tree's vertices by degree gives
    such a labelling, so this subset still meets every isomorphism class.
    """
    if n < 2:
        raise ValueError("Prüfer codes need n >= 2")
    if exhaustive:
        yield from itertools.product(range(1, n + 1), repeat=n - 2)
        return
    for part in _partitions(n - 2, n - 2):
        counts = [0] + part
        yield from _multiset_perms(counts, n - 2)


def labelled_trees(n: int, exhaustive: bool = True) -> Iterator[list[list[int]]]:
    """1-indexed neighbour lists (slot 0 unused) of labelled trees of order ``n``.

    All ``n ** (n - 2)`` of them by default; see :func:`prufer_codes` for the
    degree-sorted subset.
    """
    if n == 2:
        yield [[], [2], [1]]
        return
    for code in prufer_codes(n, exhaustive):
        nb: list[list[int]] = [[] for _ in range(n + 1)]
        for a, b in _prufer_edges(code, n):
            nb[a].append(b)
            nb[b].append(a)
        yield nb


def brute_force_free_set(n: int, exhaustive: bool | None = None) -> set[WeightSeq]:
    """Free weight sequences of labelled trees of order ``n``, deduplicated.

    By default every Prüfer code is decoded up to order 8 and the
    degree-sorted subset is used at order 9 (4.8M codes is minutes of
    CPython time).  Pass ``exhaustive`` to force either route.
    """
    if not 2 <= n <= MAX_FREE_ORDER:
        raise OracleRangeError(f"free oracle supports 2 <= n <= {MAX_FREE_ORDER}")
    if exhaustive is None:
        exhaustive = n <= EXHAUSTIVE_UP_TO
    return {_fws(nb, n) for nb in labelled_trees(n, exhaustive)}


def brute_force_rooted_set(n: int, exhaustive: bool | None = None) -> set[WeightSeq]:
    """Canonical sequences of labelled trees under every choice of root."""
    if not 2 <= n <= MAX_ROOTED_ORDER:
        raise OracleRangeError(f"rooted oracle supports 2 <= n <= {MAX_ROOTED_ORDER}")
    if exhaustive is None:
        exhaustive = n <= EXHAUSTIVE_UP_TO - 1
    out = set()
    for nb in labelled_trees(n, exhaustive):
        for r in range(1, n + 1):
            out.add(_cws(nb, r))
    return out


def _all_orderings(nb, v: int, parent: int) -> Iterator[WeightSeq]:
    kids = [w for w in nb[v] if w != parent]
    options = [list(_all_orderings(nb, w, v)) for w in kids]
    size = 1 + sum(len(o[0]) for o in options)
    for perm in itertools.permutations(range(len(kids))):
        for choice in itertools.product(*(options[k] for k in perm)):
            yield (size,) + tuple(itertools.chain.from_iterable(choice))


def cws_via_max_permutation(t: AdjList, root: int) -> WeightSeq:
    """Largest weight sequence over every ordering of every vertex's children."""
    _check_tree(t)
    total = 1
    for v in range(1, t.n + 1):
        total *= math.factorial(len(t[v]) - (v != root))
    if total > MAX_ORDERINGS:
        raise OracleRangeError(f"{total} orderings exceeds the limit of {MAX_ORDERINGS}")
    return max(_all_orderings(((),) + t.neighbors, root, 0))
