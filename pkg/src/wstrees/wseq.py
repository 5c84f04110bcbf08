"""Weight sequences: the flat integer encoding of ordered trees and forests.

A weight sequence lists, in pre-order, the number of vertices in the subtree
hanging from each vertex.  Sequences are plain tuples of positive ints.

Indexing note: the literature numbers positions from 1; here ``s[0]`` is the
root weight and ``s[k - 1]`` is the weight of vertex ``v_k``.

Python's built-in tuple comparison already is the ordering we need: the first
differing element decides, and when one sequence is a prefix of the other the
longer one is larger.  ``lex_ge`` and friends are thin names over it.
"""

from __future__ import annotations

import string
from typing import Iterable, Sequence, Tuple

WeightSeq = Tuple[int, ...]

_DIGITS = string.digits[1:] + string.ascii_uppercase  # '1'..'9', 'A'..'Z'
_ENCODE = {w: ch for w, ch in enumerate(_DIGITS, start=1)}
_DECODE = {ch: w for w, ch in _ENCODE.items()}
MAX_ENCODABLE = len(_DIGITS)  # 35


class WeightSeqError(ValueError):
    """Raised for sequences that are not valid tree/forest weight sequences."""


class EncodingRangeError(WeightSeqError):
    """A weight does not fit the single-character alphabet."""


def as_ws(values: Iterable[int]) -> WeightSeq:
    s = tuple(int(v) for v in values)
    if not s:
        raise WeightSeqError("empty weight sequence")
    if min(s) < 1:
        raise WeightSeqError(f"weights must be positive: {s}")
    return s


def concat(s: WeightSeq, t: WeightSeq) -> WeightSeq:
    return s + t


def lex_ge(s: Sequence[int], t: Sequence[int]) -> bool:
    """``s >= t`` lexicographically, a longer extension beating its prefix."""
    return tuple(s) >= tuple(t)


def succ_geq(a: WeightSeq, t: WeightSeq) -> bool:
    """The sibling gate: ``a >= t`` or ``a`` is a prefix of ``t``.

    Both cases collapse into comparing ``a`` with the first ``len(a)``
    elements of ``t``.
    """
    return a >= t[: len(a)]


def strip_root(s: WeightSeq) -> WeightSeq:
    if len(s) < 2:
        raise WeightSeqError("cannot strip the root of a single-vertex tree")
    return s[1:]


def encode_str(s: Sequence[int]) -> str:
    try:
        return "".join([_ENCODE[w] for w in s])
    except KeyError:
        bad = max(s)
        raise EncodingRangeError(
            f"weight {bad} exceeds {MAX_ENCODABLE}; use the dotted decimal format"
        ) from None


def decode_str(text: str) -> WeightSeq:
    """Inverse of :func:`encode_str`.  Dotted decimal text is accepted too."""
    text = text.strip()
    if not text:
        raise WeightSeqError("empty string")
    if "." in text:
        return decode_dotted(text)
    try:
        return tuple([_DECODE[ch] for ch in text])
    except KeyError as exc:
        raise WeightSeqError(f"invalid weight character {exc.args[0]!r}") from None


def encode_dotted(s: Sequence[int]) -> str:
    return ".".join(map(str, s))


def decode_dotted(text: str) -> WeightSeq:
    try:
        return as_ws(text.split("."))
    except ValueError as exc:
        raise WeightSeqError(f"bad dotted weight sequence {text!r}") from exc


def format_ws(s: Sequence[int]) -> str:
    """Single-character encoding when possible, dotted decimal otherwise."""
    if max(s) <= MAX_ENCODABLE:
        return encode_str(s)
    return encode_dotted(s)


def child_segments(s: Sequence[int], i: int = 0) -> list[tuple[int, int]]:
    """Half-open ``(start, stop)`` spans of the children of the vertex at ``i``."""
    out = []
    j, end = i + 1, i + s[i]
    while j < end:
        out.append((j, j + s[j]))
        j += s[j]
    return out


def forest_segments(f: Sequence[int]) -> list[tuple[int, int]]:
    """Spans of the trees making up a forest sequence such as ``b#``."""
    out = []
    j = 0
    while j < len(f):
        out.append((j, j + f[j]))
        j += f[j]
    return out


def validate_tree_ws(s: Sequence[int]) -> bool:
    n = len(s)
    if n == 0 or s[0] != n:
        return False
    for i in range(n):
        w = s[i]
        if w < 1 or i + w > n:
            return False
    # every vertex's children must tile its span exactly
    for i in range(n):
        j, end = i + 1, i + s[i]
        while j < end:
            j += s[j]
        if j != end:
            return False
    return True


def validate_forest_ws(f: Sequence[int]) -> bool:
    if not f:
        return False
    j = 0
    while j < len(f):
        w = f[j]
        if w < 1 or j + w > len(f) or not validate_tree_ws(f[j : j + w]):
            return False
        j += w
    return True


def is_canonical(s: Sequence[int]) -> bool:
    """True when every vertex's child subtrees are in non-increasing order."""
    if not validate_tree_ws(s):
        raise WeightSeqError(f"not a tree weight sequence: {tuple(s)}")
    s = tuple(s)
    for i in range(len(s)):
        prev = None
        for a, b in child_segments(s, i):
            seg = s[a:b]
            if prev is not None and seg > prev:
                return False
            prev = seg
    return True


def is_relex_ordered(seqs: Iterable[WeightSeq], strict: bool = True) -> bool:
    """Pairwise non-increasing (strictly decreasing when ``strict``)."""
    prev = None
    for s in seqs:
        if prev is not None and (s >= prev if strict else s > prev):
            return False
        prev = s
    return True
