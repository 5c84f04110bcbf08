"""
Rooted trees
============

Streaming the canonical sequences of all rooted trees of a given order,
and what the cache of small orders looks like.
"""

# %%
import itertools
import time

from wstrees import count_rooted, init_cache, rooted_trees, rt_qstart
from wstrees.wseq import encode_str

for s in rooted_trees(5):
    print(encode_str(s))

# %%
# The cache holds every rooted tree up to order L, plus the position where
# each "first subtree has order q" block starts.
cache = init_cache(8)
print([len(cache.rt_list[k]) for k in range(1, 9)])
print([rt_qstart(cache, 8, q) for q in range(7, 0, -1)])

# %%
# Generators can be abandoned early.
print([encode_str(s) for s in itertools.islice(rooted_trees(16), 5)])

# %%
t0 = time.perf_counter()
print(count_rooted(16), f"{time.perf_counter() - t0:.2f}s")
