"""Wug scoring: BAP type frequency (model M4)."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import TokenizationError
from .lexicon import Dataset, LexEntry, tokenize
from .pattern import bap
from .series import BapClass, FormPair

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WugScore:
    entry: LexEntry
    score: float


def m4_score(wug: FormPair, train_index: dict[str, BapClass], *, same_tag: bool = False) -> int:
    """Type frequency of the wug pair's BAP in the training index.

    Counts the (lemma, form, tag) triples of the matching class, or only
    those sharing the wug's tag when same_tag is set; unseen BAPs score 0.
    """
    key = bap(wug.f1, wug.f2).render()
    cls = train_index.get(key)
    if cls is None:
        return 0
    if not same_tag:
        return len(cls.pairs)
    return sum(1 for p in cls.pairs if p.tag == wug.tag)


@dataclass(frozen=True)
class M4Scorer:
    """A configured M4 model: a training index plus the shared inventory."""

    train_index: dict[str, BapClass]
    inventory: object
    same_tag: bool = False

    def score_entry(self, entry: LexEntry) -> float:
        pair = FormPair(f1=entry.lemma, f2=entry.form, tag=entry.tag)
        return float(m4_score(pair, self.train_index, same_tag=self.same_tag))

    def score_surface(self, lemma: str, form: str, tag: str) -> float:
        """Score raw surface strings; unmappable symbols warn and score 0."""
        try:
            pair = FormPair(
                f1=tokenize(lemma, self.inventory),
                f2=tokenize(form, self.inventory),
                tag=tag,
            )
        except TokenizationError as exc:
            log.warning("scoring %r/%r as 0: %s", lemma, form, exc)
            return 0.0
        return float(m4_score(pair, self.train_index, same_tag=self.same_tag))


def score_file(test_dataset: Dataset, scorer, out_path, *, header_lines=()) -> list[WugScore]:
    """Write ``lemma<TAB>form<TAB>tag<TAB>score`` rows in input order.

    Scores carry six decimal places; duplicate input rows stay duplicated.
    Returns the scored entries in the written order.
    """
    inv = test_dataset.inventory
    rows = sorted(test_dataset.entries, key=lambda e: e.ordinal)
    scored = [WugScore(entry=e, score=scorer.score_entry(e)) for e in rows]
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        for line in header_lines:
            fh.write(f"# {line}\n")
        for ws in scored:
            lemma, form, tag = test_dataset.surface(ws.entry)
            fh.write(f"{lemma}\t{form}\t{tag}\t{ws.score:.6f}\n")
    return scored
