"""
Weight sequences
================

An ordered tree is written down by visiting vertices in pre-order and
recording how many vertices hang below (and including) each one.
"""

# %%
from wstrees import adj_list_from_ws, canonical_ws_of_rooted, decode_str, encode_str, is_canonical
from wstrees.wseq import child_segments, validate_tree_ws

s = (10, 6, 4, 1, 1, 1, 1, 2, 1, 1)
print(encode_str(s), validate_tree_ws(s), is_canonical(s))

# %%
# The children of the root sit in contiguous blocks whose lengths are their weights.
print([s[a:b] for a, b in child_segments(s)])

# %%
# Reordering children changes the sequence but not the rooted tree.
shuffled = (10, 1, 6, 1, 4, 1, 1, 1, 2, 1)
print(is_canonical(shuffled))
print(canonical_ws_of_rooted(adj_list_from_ws(shuffled, free=False), 1) == s)

# %%
# Text encoding: one character per weight, A = 10.
print(decode_str("A421141111"))
