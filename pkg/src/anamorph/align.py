"""Matching-block alignment between two phoneme sequences.

Semantics are pinned exactly so that pattern extraction is reproducible:
the longest common contiguous block wins; among equally long blocks the one
starting latest in the second sequence wins, then the one starting earliest
in the first.  The block list is built by recursing left and right of the
winner, then merging blocks adjacent in both sequences.

Preferring the latest start in the second sequence keeps stem material
aligned when an affix repeats a stem-initial symbol (German ɡə- participles
of ɡ-initial stems would otherwise align prefix against stem), which is
what makes all pairs of one inflectional series share a single pattern.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class MatchBlock:
    """A common contiguous run: a[i:i+size] == b[j:j+size]."""

    i: int
    j: int
    size: int


def _index_b(b: str) -> dict:
    b2j: dict = {}
    for j, tok in enumerate(b):
        b2j.setdefault(tok, []).append(j)
    return b2j


def _longest(a: str, b2j: dict, alo: int, ahi: int, blo: int, bhi: int):
    """Best block within the windows under the (size, -j, i) preference."""
    besti, bestj, bestsize = alo, blo, 0
    j2len: dict = {}
    for i in range(alo, ahi):
        newj2len: dict = {}
        for j in b2j.get(a[i], ()):
            if j < blo:
                continue
            if j >= bhi:
                break
            k = newj2len[j] = j2len.get(j - 1, 0) + 1
            if k > bestsize or (k == bestsize and j - k + 1 > bestj):
                besti, bestj, bestsize = i - k + 1, j - k + 1, k
        j2len = newj2len
    return besti, bestj, bestsize


def longest_match(a: str, b: str, window_a=None, window_b=None) -> MatchBlock | None:
    """Longest common block within the given windows, or None.

    Ties are broken by largest j, then smallest i.
    """
    alo, ahi = window_a if window_a is not None else (0, len(a))
    blo, bhi = window_b if window_b is not None else (0, len(b))
    i, j, size = _longest(a, _index_b(b), alo, ahi, blo, bhi)
    if size == 0:
        return None
    return MatchBlock(i=i, j=j, size=size)


def matching_blocks(a: str, b: str) -> list[MatchBlock]:
    """All matching blocks of the recursive longest-block alignment."""
    b2j = _index_b(b)
    queue = [(0, len(a), 0, len(b))]
    found = []
    while queue:
        alo, ahi, blo, bhi = queue.pop()
        i, j, size = _longest(a, b2j, alo, ahi, blo, bhi)
        if size:
            found.append((i, j, size))
            queue.append((alo, i, blo, j))
            queue.append((i + size, ahi, j + size, bhi))
    found.sort()
    merged: list[list[int]] = []
    for i, j, size in found:
        if merged and merged[-1][0] + merged[-1][2] == i and merged[-1][1] + merged[-1][2] == j:
            merged[-1][2] += size
        else:
            merged.append([i, j, size])
    return [MatchBlock(i=i, j=j, size=size) for i, j, size in merged]
