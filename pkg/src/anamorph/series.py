"""Analogical series: the dataset's form pairs indexed by their BAP.

All pairs sharing one BAP form a class Phi; the first and second members of
its pairs make up the class columns, whose forms count as mutually similar.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .lexicon import Dataset
from .pattern import AlternationPattern, bap


@dataclass(frozen=True)
class FormPair:
    """A (lemma, inflected form, tag) triple; f1 is always the lemma side."""

    f1: str
    f2: str
    tag: str


@dataclass(frozen=True)
class BapClass:
    """One analogical series: every pair in `pairs` satisfies `bap`."""

    bap: AlternationPattern
    pairs: tuple[FormPair, ...]
    col1: Counter
    col2: Counter

    @property
    def pair_count(self) -> int:
        return len(self.pairs)


def _entries(data):
    if isinstance(data, Dataset):
        return data.entries
    return data


def index_by_bap(data, *, per_tag: bool = False) -> dict[str, BapClass]:
    """Group the distinct (lemma, form, tag) triples of `data` by BAP.

    Keys are the canonical BAP rendering (plus the tag when per_tag is set);
    the map and each class's pair tuple are deterministically ordered.
    Identical (f1, f2) pairs with different tags contribute one Phi member
    per tag but one column member per distinct form.
    """
    triples = {
        FormPair(f1=e.lemma, f2=e.form, tag=e.tag) for e in _entries(data)
    }
    grouped: dict[tuple, list[FormPair]] = {}
    baps: dict[tuple, AlternationPattern] = {}
    for pair in sorted(triples, key=lambda p: (p.f1, p.tag, p.f2)):
        ap = bap(pair.f1, pair.f2)
        key = (ap.render(), pair.tag) if per_tag else (ap.render(),)
        grouped.setdefault(key, []).append(pair)
        baps.setdefault(key, ap)
    out: dict[str, BapClass] = {}
    for key in sorted(grouped):
        pairs = tuple(grouped[key])
        col1 = Counter()
        col2 = Counter()
        for p in pairs:
            col1[p.f1] += 1
            col2[p.f2] += 1
        name = key[0] if not per_tag else f"{key[0]}\t{key[1]}"
        out[name] = BapClass(bap=baps[key], pairs=pairs, col1=col1, col2=col2)
    return out


def class_similar_forms(c: BapClass, side: int) -> Counter:
    """The requested column of the series (1 = lemma side, 2 = form side)."""
    if side not in (1, 2):
        raise ValueError("side must be 1 or 2")
    return Counter(c.col1 if side == 1 else c.col2)
