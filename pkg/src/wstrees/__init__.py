"""Exhaustive generation of unlabelled rooted and free trees via weight sequences."""

from .convert import (
    AdjList,
    NotATreeError,
    adj_list_from_ws,
    adj_matrix_from_ws,
    assemble_adj,
    assemble_adj_bi,
    canonical_ws_of_rooted,
    find_centroids,
    free_tree_adjacencies,
    fws_of_free,
)
from .freegen import bft, count_free, free_trees, uft
from .rootedgen import (
    ConfigError,
    RootedCache,
    count_rooted,
    get_cache,
    init_cache,
    rooted_trees,
    rt_helper,
    rt_helper_ref,
    rt_qstart,
)
from .wseq import (
    EncodingRangeError,
    WeightSeq,
    WeightSeqError,
    concat,
    decode_str,
    encode_str,
    is_canonical,
    lex_ge,
    strip_root,
    succ_geq,
    validate_tree_ws,
)

__version__ = "0.1.0"
