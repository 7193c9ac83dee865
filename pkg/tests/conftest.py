import random

import pytest

from anamorph import LexEntry, build_inventory, reorder_particle, tokenize

# Worked material: the anspielen paradigm, assorted weak verbs, the ab- series
# and the pair under analysis.  Particle rows are space-separated on purpose.
MINI_LEXICON_ROWS = [
    ("anʃpiːlən", "ʃpiːlət an", "V;IND;PST;2;PL"),
    ("anʃpiːlən", "ʃpiːltə an", "V;SBJV;PST;1;SG"),
    ("anʃpiːlən", "ʃpiːlt an", "V;IMP;2;PL"),
    ("anʃpiːlən", "ʃpiːlə an", "V;IMP;2;SG"),
    ("anʃpiːlən", "anʃpiːləst", "V;SBJV;PST;2;SG"),
    ("anʃpiːlən", "anʃpiːlst", "V;IND;PRS;2;SG"),
    ("tariːfiːrən", "tariːfiːrənt", "V.PTCP;PRS"),
    ("tariːfiːrən", "tariːfiːrtən", "V;SBJV;PST;3;PL"),
    ("astən", "astənt", "V.PTCP;PRS"),
    ("astən", "astətət", "V;SBJV;PST;2;PL"),
    ("vaɪnən", "vaɪnənt", "V.PTCP;PRS"),
    ("vaɪnən", "vaɪnt", "V;IND;PRS;3;SG"),
    ("ʦɛrʃtraɪtən", "ʦɛrʃtraɪtənt", "V.PTCP;PRS"),
    ("ʦɛrʃtraɪtən", "ʦɛrʃtraɪtəst", "V;SBJV;PST;2;SG"),
    ("apzuːxən", "apɡəzuːxt", "V.PTCP;PST"),
    ("aplɔxən", "apɡəlɔxt", "V.PTCP;PST"),
    ("aprʏkən", "apɡərʏkt", "V.PTCP;PST"),
    ("apɡʊkən", "apɡəɡʊkt", "V.PTCP;PST"),
    ("anʃpiːlən", "anʃpiːlənt", "V.PTCP;PRS"),
]

# The inflectional series of example material: four ab- verbs, one class.
SERIES_ROWS = MINI_LEXICON_ROWS[14:18]


def build_lexicon(rows, source="train"):
    """Tokenize (lemma, form, tag) surface rows into entries + inventory."""
    reordered = [
        (reorder_particle(lemma), reorder_particle(form), tag)
        for lemma, form, tag in rows
    ]
    inv = build_inventory([s for lemma, form, _ in reordered for s in (lemma, form)])
    entries = [
        LexEntry(
            lemma=tokenize(lemma, inv),
            form=tokenize(form, inv),
            tag=tag,
            source=source,
            ordinal=i,
        )
        for i, (lemma, form, tag) in enumerate(reordered)
    ]
    return entries, inv


@pytest.fixture(scope="session")
def mini_lexicon():
    return build_lexicon(MINI_LEXICON_ROWS)


SUFFIX_RULES = [
    ("en", "t"),
    ("en", "ent"),
    ("e", "es"),
    ("", "da"),
    ("an", "ban"),
]


def random_lexicon(rng: random.Random, *, max_entries=30, alphabet="abcdef"):
    """A small synthetic lexicon mixing suffix-rule pairs with noise pairs."""
    rows = []
    n = rng.randint(4, max_entries)
    tags = ["A;X", "B;Y", "C;Z"]
    while len(rows) < n:
        stem = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 4)))
        if rng.random() < 0.8:
            sfx1, sfx2 = rng.choice(SUFFIX_RULES)
            lemma, form = stem + sfx1, stem + sfx2
        else:
            lemma = stem
            form = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 5)))
        if lemma and form:
            rows.append((lemma, form, rng.choice(tags)))
    return rows


def lexicon_triples(rows):
    """Plain string triples for the brute-force oracle (ASCII rows only)."""
    return [(lemma, form, tag) for lemma, form, tag in rows]
