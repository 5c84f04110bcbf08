import random

import pytest

from wstrees import AdjList, get_cache
from wstrees.wseq import decode_str

# Listings reproduced from the published tables of B(3), B(4), B(5), F_U(8), F_B(8).
B3 = [decode_str(x) for x in "321 311".split()]
B4 = [decode_str(x) for x in "4321 4311 4211 4111".split()]
B5 = [decode_str(x) for x in "54321 54311 54211 54111 53211 53111 52121 52111 51111".split()]
FU8 = [
    decode_str(x)
    for x in (
        "83213211 83213111 83212121 83212111 83211111 "
        "83113111 83112121 83112111 83111111 "
        "82121211 82121111 82111111 81111111"
    ).split()
]
FB8 = [
    decode_str(x)
    for x in (
        "43214321 43214311 43214211 43214111 "
        "43114311 43114211 43114111 "
        "42114211 42114111 41114111"
    ).split()
]

# OEIS A000081 (rooted) and A000055 (free), index = order
ROOTED_COUNTS = [0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766, 12486, 32973, 87811, 235381]
FREE_COUNTS = [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]


def random_tree(n: int, rng: random.Random) -> AdjList:
    """Uniform labelled tree via a random Prüfer code."""
    from wstrees.oracle import prufer_to_tree

    if n == 1:
        return AdjList(((),))
    if n == 2:
        return AdjList(((2,), (1,)))
    return prufer_to_tree([rng.randint(1, n) for _ in range(n - 2)], n)


def ordered_ws(t: AdjList, root: int, rng: random.Random | None = None) -> tuple:
    """Weight sequence of ``t`` with each vertex's children in label (or shuffled) order."""

    def walk(v, parent):
        kids = [w for w in t[v] if w != parent]
        if rng is not None:
            rng.shuffle(kids)
        parts = [walk(w, v) for w in kids]
        return (1 + sum(map(len, parts)),) + sum(parts, ())

    return walk(root, 0)


@pytest.fixture(scope="session")
def cache16():
    return get_cache(16)


@pytest.fixture(scope="session")
def cache16_adj():
    return get_cache(16, adjacency=True)
