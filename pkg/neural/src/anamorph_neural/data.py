"""Annotated-export reading and example construction.

The miner's export contract is one row per entry:
``lemma<TAB>form<TAB>tag<TAB>bap<TAB>fap1<TAB>fap2`` with '#' comment lines.
Word material is tokenized per character; tags split into their feature
atoms; alternation patterns keep '+' and '/' as ordinary symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .vocab import SEP


class NeuralDataError(Exception):
    pass


# Classifier target cells of the wug test sets, per language.
TARGET_TAGS = {
    "eng": "V;PST;1;SG",
    "nld": "V;PST;PL",
    "deu": "V.PTCP;PST",
}


@dataclass(frozen=True)
class AnnotatedRow:
    lemma: str
    form: str
    tag: str
    bap: str
    fap1: str
    fap2: str

    @property
    def has_fap(self) -> bool:
        return bool(self.fap1 and self.fap2)


def read_annotated(path) -> list[AnnotatedRow]:
    rows = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").split("\n"), start=1
    ):
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 6:
            raise NeuralDataError(
                f"{path} line {lineno}: expected 6 annotated columns, found {len(cols)}"
            )
        rows.append(AnnotatedRow(*cols))
    if not rows:
        raise NeuralDataError(f"{path}: no data rows")
    return rows


def chars(s: str) -> list[str]:
    return list(s)


def tag_features(tag: str) -> list[str]:
    return tag.split(";")


def m1_source(row: AnnotatedRow) -> list[str]:
    """lemma + tag + BAP + FAP, separator-delimited."""
    fap = f"{row.fap1}/{row.fap2}" if row.has_fap else ""
    return (
        chars(row.lemma)
        + [SEP]
        + tag_features(row.tag)
        + [SEP]
        + chars(row.bap)
        + [SEP]
        + chars(fap)
    )


def m1_target(row: AnnotatedRow) -> list[str]:
    return chars(row.form)


def m2_source(row: AnnotatedRow) -> list[str]:
    return chars(row.lemma) + [SEP] + tag_features(row.tag)


def m2_target(row: AnnotatedRow) -> list[str]:
    return chars(row.fap2)


def m3_examples(rows, target_tag: str):
    """Classifier examples: one per distinct form, positive iff the form is
    attested under the target tag (syncretic forms keep only that reading)."""
    attested = {}
    for row in rows:
        attested.setdefault(row.form, set()).add(row.tag)
    if not any(target_tag in tags for tags in attested.values()):
        raise NeuralDataError(f"target tag {target_tag!r} absent from data")
    examples = [
        (chars(form), 1 if target_tag in tags else 0)
        for form, tags in sorted(attested.items())
    ]
    if all(label == 1 for _, label in examples):
        raise NeuralDataError("no negative examples for the classifier")
    return examples
