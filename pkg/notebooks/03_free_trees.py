"""
Free trees
==========

Unicentroidal trees are rooted at their centroid; bicentroidal trees are a
pair of rooted halves joined at their roots.
"""

# %%
import time

from wstrees import bft, count_free, free_trees, uft
from wstrees.wseq import encode_str

print("unicentroidal:", [encode_str(s) for s in uft(8)])
print("bicentroidal: ", [encode_str(s) for s in bft(8)])
print(len(list(free_trees(8))))

# %%
for n in range(18, 22):
    t0 = time.perf_counter()
    c = count_free(n)
    print(n, c, f"{time.perf_counter() - t0:.2f}s")
