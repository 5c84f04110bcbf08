import pytest

from wstrees import ConfigError, bft, count_free, free_trees, get_cache, is_canonical, rooted_trees, uft
from wstrees.freegen import free_partition, free_partitions
from wstrees.wseq import is_relex_ordered

from conftest import FB8, FREE_COUNTS, FU8


def test_uft_8():
    assert list(uft(8)) == FU8


def test_bft_8():
    out = list(bft(8))
    assert out == FB8
    assert (4, 3, 2, 1, 4, 3, 2, 1) in out


def test_free_8():
    out = list(free_trees(8))
    assert out == FU8 + FB8
    assert len(out) == 23


def test_small_orders():
    assert list(uft(2)) == []
    assert list(uft(1)) == [(1,)]
    assert list(bft(2)) == [(1, 1)]
    assert list(free_trees(1)) == [(1,)]
    assert list(free_trees(2)) == [(1, 1)]
    # from the Prüfer oracle at order 4 (16 labelled trees, 2 classes)
    assert list(free_trees(4)) == [(4, 1, 1, 1), (2, 1, 2, 1)]


def test_errors():
    with pytest.raises(ValueError):
        free_trees(0)
    with pytest.raises(ValueError):
        bft(7)
    with pytest.raises(ConfigError):
        free_trees(20, get_cache(6))


@pytest.mark.parametrize("n", range(1, 17))
def test_free_properties(n, cache16):
    out = list(free_trees(n, cache16))
    assert len(out) == FREE_COUNTS[n]
    assert is_relex_ordered(out)
    h = n // 2
    for s in out:
        if s[0] == n:
            assert is_canonical(s)
            if n > 1:
                assert s[1] <= (n - 1) // 2
        else:
            assert n % 2 == 0 and s[0] == s[h] == h
            assert s[:h] >= s[h:]
            assert is_canonical(s[:h]) and is_canonical(s[h:])


@pytest.mark.parametrize("n", range(1, 13))
def test_uft_subset_of_rooted(n):
    assert set(uft(n)) <= set(rooted_trees(n))


@pytest.mark.parametrize("n", [6, 8, 10])
def test_bicentroidal_pairs_once(n):
    halves = get_cache(16).rt_list[n // 2]
    out = list(bft(n))
    m = len(halves)
    assert len(out) == m * (m + 1) // 2
    pairs = {frozenset((s[: n // 2], s[n // 2 :])) for s in out}
    assert len(pairs) == len(out)


def test_partitions_concatenate_to_stream():
    c = get_cache(8)
    for n in (1, 2, 9, 12):
        joined = [s for p in free_partitions(n) for s in free_partition(n, p, c)]
        assert joined == list(free_trees(n, c))


def test_larger_cache_same_output():
    assert list(free_trees(14, get_cache(16))) == list(free_trees(14))


def test_count_free():
    assert count_free(12) == 551


def test_counting_memory_does_not_grow_with_output():
    import tracemalloc

    c = get_cache(13)
    peaks = []
    for n in (14, 18):
        tracemalloc.start()
        count_free(n, c)
        peaks.append(tracemalloc.get_traced_memory()[1])
        tracemalloc.stop()
    # 3159 vs 123867 trees; peak stays at a few generator frames either way
    assert max(peaks) < 256 * 1024


@pytest.mark.slow
def test_order_24_count_memory():
    import resource
    import subprocess
    import sys

    code = (
        "import resource; from wstrees import count_free, get_cache;"
        "print(count_free(24, get_cache(13)));"
        "print(resource.getrusage(resource.RUSAGE_SELF).ru_maxrss)"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True).stdout.split()
    assert int(out[0]) == 39299897
    assert int(out[1]) < 500 * 1024  # kilobytes on Linux
