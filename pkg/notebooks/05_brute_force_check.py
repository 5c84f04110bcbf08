"""
Checking against brute force
============================

Every labelled tree comes from a Prüfer code; naming each by its free
weight sequence and deduplicating gives the isomorphism classes.
"""

# %%
from wstrees import free_trees, rooted_trees
from wstrees.oracle import brute_force_free_set, brute_force_rooted_set, prufer_codes

for n in range(2, 9):
    labelled = n ** (n - 2)
    classes = brute_force_free_set(n)
    print(n, labelled, len(classes), classes == set(free_trees(n)))

# %%
# At order 9 only degree-sorted labellings are decoded.
print(sum(1 for _ in prufer_codes(9, exhaustive=False)), "of", 9 ** 7, "codes")
print(brute_force_free_set(9) == set(free_trees(9)))
print(brute_force_rooted_set(7) == set(rooted_trees(7)))
