"""Adjacency structures for weight sequences, and canonical forms of trees.

Vertices are labelled ``1..n``.  For a sequence, labels follow pre-order, so
vertex ``i`` is the one whose weight is ``s[i - 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .wseq import WeightSeq, WeightSeqError, forest_segments, validate_tree_ws


class NotATreeError(ValueError):
    """Input graph is disconnected, cyclic, or malformed."""


@dataclass(frozen=True)
class AdjList:
    """Sorted neighbour lists; ``adj[v]`` gives the neighbours of vertex ``v``."""

    neighbors: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.neighbors)

    def __getitem__(self, v: int) -> tuple[int, ...]:
        if not 1 <= v <= len(self.neighbors):
            raise IndexError(f"vertex {v} out of range 1..{self.n}")
        return self.neighbors[v - 1]

    def __len__(self) -> int:
        return len(self.neighbors)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nb in enumerate(self.neighbors, 1) for j in nb if i < j]

    def degree(self, v: int) -> int:
        return len(self[v])

    def is_tree(self) -> bool:
        try:
            _check_tree(self)
        except NotATreeError:
            return False
        return True

    def relabel(self, perm: Sequence[int]) -> "AdjList":
        """Vertex ``v`` becomes ``perm[v - 1]``."""
        return AdjList.from_edges(self.n, ((perm[i - 1], perm[j - 1]) for i, j in self.edges()))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "AdjList":
        nb: list[list[int]] = [[] for _ in range(n)]
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise NotATreeError(f"bad edge {i}-{j} for order {n}")
            nb[i - 1].append(j)
            nb[j - 1].append(i)
        return cls(tuple(tuple(sorted(x)) for x in nb))

    def to_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=np.uint8)
        for i, j in self.edges():
            m[i - 1, j - 1] = m[j - 1, i - 1] = 1
        return m


def _is_free_pair(s: Sequence[int]) -> bool:
    n = len(s)
    h = n // 2
    return n % 2 == 0 and s[0] == h and validate_tree_ws(s[:h]) and validate_tree_ws(s[h:])


def _neighbor_lists(s: Sequence[int], free: bool) -> list[list[int]]:
    n = len(s)
    nb: list[list[int]] = [[] for _ in range(n + 1)]  # slot 0 unused
    for i in range(1, n + 1):
        j = i + 1
        end = i + s[i - 1]
        while j < end:
            nb[i].append(j)
            nb[j].append(i)
            j += s[j - 1]
    if free and 2 * s[0] == n:
        hn = n // 2 + 1
        nb[1].append(hn)
        nb[hn].insert(0, 1)
    return nb


def adj_list_from_ws(s: Sequence[int], free: bool = True) -> AdjList:
    """Adjacency list of the tree whose (free) weight sequence is ``s``.

    With ``free=True`` a sequence whose first weight is ``n / 2`` is read as a
    bicentroidal pair and the edge between the two halves' roots is added.
    ``free=False`` treats ``s`` as a plain rooted tree.
    """
    if not (validate_tree_ws(s) or (free and _is_free_pair(s))):
        raise WeightSeqError(f"not a tree or free weight sequence: {tuple(s)}")
    nb = _neighbor_lists(s, free)
    return AdjList(tuple(map(tuple, nb[1:])))


def adj_matrix_from_ws(s: Sequence[int], free: bool = True) -> np.ndarray:
    """``n x n`` 0/1 ``uint8`` matrix; row ``i - 1`` belongs to vertex ``i``."""
    return adj_list_from_ws(s, free).to_matrix()


def rooted_adj_table(cache) -> dict[WeightSeq, tuple[tuple[int, ...], ...]]:
    """Neighbour tuples for every cached rooted tree, keyed by its sequence."""
    table = {}
    for trees in cache.rt_list[1:]:
        for t in trees:
            table[t] = tuple(map(tuple, _neighbor_lists(t, free=False)[1:]))
    return table


def _rooted_nb(t: WeightSeq, cache) -> tuple[tuple[int, ...], ...]:
    table = cache.adj if cache is not None else None
    if table is not None:
        hit = table.get(t)
        if hit is not None:
            return hit
    return tuple(map(tuple, _neighbor_lists(t, free=False)[1:]))


def _graft(out: list, sub, offset: int, parent: int) -> None:
    # sub's vertex k becomes k + offset; its root gains ``parent`` as first neighbour
    first = True
    for k, nbrs in enumerate(sub, 1):
        shifted = [x + offset for x in nbrs]
        if first:
            shifted.insert(0, parent)
            first = False
        out[k + offset - 1] = tuple(shifted)


def assemble_adj(n: int, a: WeightSeq, b_tail: WeightSeq, cache=None) -> AdjList:
    """Adjacency of ``(n,) + a + b_tail`` built from cached pieces.

    ``a`` hangs below vertex 1 starting at label 2; each tree of the forest
    ``b_tail`` starts at label ``len(a) + 2 + segment start``.
    """
    if 1 + len(a) + len(b_tail) != n:
        raise WeightSeqError(f"pieces do not make a tree of order {n}")
    out: list = [()] * n
    roots = [2]
    _graft(out, _rooted_nb(a, cache), 1, 1)
    base = len(a) + 1
    for start, stop in forest_segments(b_tail):
        _graft(out, _rooted_nb(b_tail[start:stop], cache), base + start, 1)
        roots.append(base + start + 1)
    out[0] = tuple(roots)
    return AdjList(tuple(out))


def assemble_adj_bi(a1: WeightSeq, a2: WeightSeq, cache=None) -> AdjList:
    """Adjacency of the bicentroidal tree ``a1 + a2``."""
    h = len(a1)
    if len(a2) != h:
        raise WeightSeqError("bicentroidal halves must have equal order")
    out: list = [()] * (2 * h)
    first = _rooted_nb(a1, cache)
    for k, nbrs in enumerate(first, 1):
        out[k - 1] = nbrs
    out[0] = out[0] + (h + 1,)
    _graft(out, _rooted_nb(a2, cache), h, 1)
    return AdjList(tuple(out))


def adj_from_free_ws(s: WeightSeq, cache=None) -> AdjList:
    """Split a generated free sequence into its pieces and assemble."""
    n = len(s)
    if n == 1:
        return AdjList(((),))
    if s[0] == n:
        q = s[1]
        return assemble_adj(n, s[1 : q + 1], s[q + 1 :], cache)
    h = n // 2
    return assemble_adj_bi(s[:h], s[h:], cache)


def free_tree_adjacencies(n: int, cache=None) -> Iterator[tuple[WeightSeq, AdjList]]:
    """Yield ``(fws, adjacency)`` for every free tree of order ``n``."""
    from .freegen import free_trees
    from .rootedgen import free_cache_bound, get_cache

    if cache is None or cache.adj is None:
        cache = get_cache(max(free_cache_bound(n), cache.L if cache else 0), adjacency=True)
    for s in free_trees(n, cache):
        yield s, adj_from_free_ws(s, cache)


# --- canonical forms of arbitrary labelled trees -------------------------


def _check_tree(t: AdjList) -> None:
    n = t.n
    if n == 0:
        raise NotATreeError("empty graph")
    deg_total = 0
    for v, nb in enumerate(t.neighbors, 1):
        for w in nb:
            if not 1 <= w <= n or w == v:
                raise NotATreeError(f"bad neighbour {w} of vertex {v}")
            if v not in t.neighbors[w - 1]:
                raise NotATreeError(f"asymmetric edge {v}-{w}")
        deg_total += len(nb)
    if deg_total != 2 * (n - 1):
        raise NotATreeError(f"{deg_total // 2} edges, a tree of order {n} has {n - 1}")
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in t.neighbors[v - 1]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise NotATreeError("graph is disconnected")


def _cws(nbrs: Sequence[Sequence[int]], root: int, skip: int = 0) -> WeightSeq:
    """Canonical sequence of the component of ``root`` once ``skip`` is removed.

    ``nbrs`` is 1-indexed (slot 0 unused).  Iterative post-order.
    """
    order = [root]
    parent = {root: skip}
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        pv = parent[v]
        for w in nbrs[v]:
            if w != pv:
                parent[w] = v
                order.append(w)
    forms: dict[int, list] = {v: [] for v in order}
    result: WeightSeq = ()
    for v in reversed(order):
        kids = forms.pop(v)
        kids.sort(reverse=True)
        seq = (1 + sum(map(len, kids)),) + sum(kids, ())
        if v == root:
            result = seq
        else:
            forms[parent[v]].append(seq)
    return result


def canonical_ws_of_rooted(t: AdjList, root: int) -> WeightSeq:
    """Canonical weight sequence of ``t`` rooted at ``root``."""
    _check_tree(t)
    if not 1 <= root <= t.n:
        raise NotATreeError(f"root {root} not a vertex")
    return _cws(((),) + t.neighbors, root)


def _centroids(nbrs: Sequence[Sequence[int]], n: int) -> list[int]:
    order = [1]
    parent = [0] * (n + 1)
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in nbrs[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    size = [1] * (n + 1)
    biggest = [0] * (n + 1)
    for v in reversed(order):
        p = parent[v]
        if p:
            size[p] += size[v]
            if size[v] > biggest[p]:
                biggest[p] = size[v]
    worst = [max(biggest[v], n - size[v]) for v in range(1, n + 1)]
    best = min(worst)
    return [v for v in range(1, n + 1) if worst[v - 1] == best]


def find_centroids(t: AdjList) -> list[int]:
    """The one or two vertices minimizing the largest component left on removal."""
    _check_tree(t)
    return _centroids(((),) + t.neighbors, t.n)


def _fws(nbrs: Sequence[Sequence[int]], n: int) -> WeightSeq:
    cents = _centroids(nbrs, n)
    if len(cents) == 1:
        return _cws(nbrs, cents[0])
    u, v = cents
    cu = _cws(nbrs, u, v)
    cv = _cws(nbrs, v, u)
    return cu + cv if cu >= cv else cv + cu


def fws_of_free(t: AdjList) -> WeightSeq:
    """Free weight sequence: the isomorphism-invariant name of a free tree."""
    _check_tree(t)
    return _fws(((),) + t.neighbors, t.n)


def format_edges(adj: AdjList) -> str:
    return " ".join(f"{i}-{j}" for i, j in sorted(adj.edges()))


def format_adjlist(adj: AdjList) -> str:
    return ";".join(" ".join(map(str, nb)) for nb in adj.neighbors)


def format_matrix(adj: AdjList) -> str:
    return "\n".join("".join("1" if x else "0" for x in row) for row in adj.to_matrix())


def parse_edges(line: str) -> AdjList:
    """Inverse of :func:`format_edges`; the order is inferred from the labels."""
    pairs = [tuple(map(int, tok.split("-"))) for tok in line.split()]
    n = max((max(p) for p in pairs), default=1)
    return AdjList.from_edges(n, pairs)
