"""
Adjacency lists and matrices
============================

Converting generated sequences into conventional graph structures, and
checking the result with an independent canonical form.
"""

# %%
import numpy as np

from wstrees import adj_matrix_from_ws, find_centroids, free_tree_adjacencies, fws_of_free
from wstrees.convert import format_edges

for s, adj in free_tree_adjacencies(6):
    print(s, format_edges(adj), find_centroids(adj))

# %%
m = adj_matrix_from_ws((4, 3, 2, 1, 4, 3, 2, 1))
print(m)
print("degrees:", m.sum(axis=1))

# Eigenvalues of a path's adjacency matrix are 2 cos(k pi / (n + 1)).
print(np.allclose(np.sort(np.linalg.eigvalsh(m)), np.sort(2 * np.cos(np.arange(1, 9) * np.pi / 9))))

# %%
# Round trip through the adjacency list recovers the sequence.
print(all(fws_of_free(adj) == s for s, adj in free_tree_adjacencies(10)))
